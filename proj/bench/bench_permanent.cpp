// Copyright 2026 The lsbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Naive permanent against the serial and OpenMP Glynn kernels, plus the
// parallel distribution builder.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "lsbs/distribution.hpp"
#include "lsbs/haar.hpp"
#include "lsbs/permanent.hpp"
#include "lsbs/rng.hpp"

namespace {

lsbs::ComplexMatrix random_matrix(std::size_t n) {
    lsbs::Rng rng(n);
    lsbs::ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = lsbs::Complex(rng.normal(), rng.normal());
    return a;
}

void BM_PermanentNaive(benchmark::State& state) {
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lsbs::permanent_naive(a));
}
BENCHMARK(BM_PermanentNaive)->DenseRange(4, 10, 2);

void BM_PermanentGlynnSerial(benchmark::State& state) {
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lsbs::permanent_glynn(a));
}
BENCHMARK(BM_PermanentGlynnSerial)->DenseRange(4, 10, 2)->DenseRange(14, 24, 2);

void BM_PermanentGlynnParallel(benchmark::State& state) {
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)));
    const auto threads = static_cast<std::size_t>(state.range(1));
    omp_set_num_threads(static_cast<int>(threads));
    for (auto _ : state) benchmark::DoNotOptimize(lsbs::permanent_glynn_parallel(a, threads));
}
BENCHMARK(BM_PermanentGlynnParallel)->ArgsProduct({{14, 18, 22, 24}, {1, 2, 4, 8}})->UseRealTime();

void BM_DistributionThreads(benchmark::State& state) {
    const auto u = lsbs::haar_random_unitary(20, 1);
    const auto input = lsbs::FockState::leading_ones(20, 5);
    omp_set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lsbs::full_distribution(u, input, lsbs::Family::collision_free,
                                                         lsbs::ParticleModel::indistinguishable, true));
    }
}
BENCHMARK(BM_DistributionThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
