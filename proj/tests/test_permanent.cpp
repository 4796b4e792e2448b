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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>
#include <omp.h>

#include "lsbs/permanent.hpp"
#include "lsbs/rng.hpp"
#include "test_util.hpp"

using namespace lsbs;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> e(n * n);
    for (auto& z : e) z = Complex(rng.uniform(), rng.uniform());
    return ComplexMatrix(n, n, e);
}

ComplexMatrix ones(std::size_t n) { return ComplexMatrix(n, n, std::vector<Complex>(n * n, 1.0)); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(PermanentNaive, KnownValues) {
    EXPECT_EQ(permanent_naive(ComplexMatrix::identity(3)), Complex(1.0));
    EXPECT_EQ(permanent_naive(ones(4)), Complex(24.0));
    ComplexMatrix z = random_matrix(3, 1);
    for (std::size_t c = 0; c < 3; ++c) z(1, c) = 0.0;
    EXPECT_EQ(permanent_naive(z), Complex(0.0));
}

TEST(PermanentNaive, Limits) {
    EXPECT_LSBS_ERROR(permanent_naive(ComplexMatrix(2, 3)), ErrorCategory::invalid_dimension);
    EXPECT_LSBS_ERROR(permanent_naive(ones(11)), ErrorCategory::oracle_scale_exceeded);
}

TEST(PermanentGlynn, BaseCasesAndAllOnes) {
    EXPECT_EQ(permanent_glynn(ComplexMatrix(1, 1, {Complex(0.3, -2.0)})), Complex(0.3, -2.0));
    EXPECT_NEAR(permanent_glynn(ones(5)).real(), 120.0, 120.0 * 1e-9);
    EXPECT_NEAR(permanent_glynn_parallel(ones(8), 4).real(), 40320.0, 40320.0 * 1e-9);
    EXPECT_LSBS_ERROR(permanent_glynn(ComplexMatrix(3, 2)), ErrorCategory::invalid_dimension);
}

TEST(PermanentGlynn, MatchesNaive6x6) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto a = random_matrix(6, 1000 + s);
        EXPECT_LE(rel(permanent_glynn(a), permanent_naive(a)), 1e-9);
    }
}

TEST(PermanentGlynn, MatchesNaiveAcrossOrders) {
    for (std::size_t n = 1; n <= 9; ++n) {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto a = random_matrix(n, n * 100 + s);
            EXPECT_LE(rel(permanent_glynn(a), permanent_naive(a)), 1e-9) << n;
        }
    }
}

TEST(PermanentGlynn, Multilinearity) {
    const auto a = random_matrix(7, 3);
    const Complex c(0.7, -1.3);
    ComplexMatrix b = a;
    for (std::size_t col = 0; col < 7; ++col) b(4, col) *= c;
    const Complex pa = permanent_glynn(a);
    EXPECT_LE(std::abs(permanent_glynn(b) - c * pa) / std::abs(c * pa), 1e-12);
}

TEST(PermanentGlynn, PermutationAndTransposeInvariance) {
    const auto a = random_matrix(7, 4);
    const std::vector<std::size_t> p = {2, 6, 0, 5, 1, 3, 4};
    const std::vector<std::size_t> q = {6, 5, 4, 3, 2, 1, 0};
    ComplexMatrix b(7, 7);
    for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t c = 0; c < 7; ++c) b(r, c) = a(p[r], q[c]);
    const Complex pa = permanent_glynn(a);
    EXPECT_LE(std::abs(permanent_glynn(b) - pa) / std::abs(pa), 1e-12);
    EXPECT_LE(std::abs(permanent_glynn(a.transpose()) - pa) / std::abs(pa), 1e-12);
}

TEST(PermanentGlynnParallel, BitIdenticalAcrossPartitionsAndThreads) {
    for (std::size_t n : {2, 5, 8, 12}) {
        const auto a = random_matrix(n, 77 + n);
        const Complex serial = permanent_glynn(a);
        EXPECT_EQ(permanent_glynn_parallel(a, 1), serial);
        for (std::size_t k : {2, 3, 4, 8, 64, 1000}) {
            for (int threads : {1, 2, 4}) {
                omp_set_num_threads(threads);
                EXPECT_EQ(permanent_glynn_parallel(a, k), serial) << n << " " << k << " " << threads;
            }
        }
    }
    EXPECT_LSBS_ERROR(permanent_glynn_parallel(ones(3), 0), ErrorCategory::invalid_configuration);
}

TEST(PermanentGlynn, BlockCount) {
    EXPECT_EQ(glynn_block_count(1), 1u);
    EXPECT_EQ(glynn_block_count(4), 8u);
    EXPECT_EQ(glynn_block_count(7), 64u);
    EXPECT_EQ(glynn_block_count(20), 64u);
}

TEST(TimingModel, RecoversPaperFit) {
    std::vector<std::pair<double, double>> pts;
    for (int n = 10; n <= 20; ++n) pts.emplace_back(n, 4.47e-8 * n * std::pow(2.0, 1.05 * n));
    const auto fit = fit_timing_model(pts);
    EXPECT_NEAR(fit.prefactor / 4.47e-8, 1.0, 1e-6);
    EXPECT_NEAR(fit.exponent_scale / 1.05, 1.0, 1e-6);
    EXPECT_NEAR(fit.predict(15) / (4.47e-8 * 15 * std::pow(2.0, 1.05 * 15)), 1.0, 1e-6);
}

TEST(TimingModel, ExactUnitModel) {
    std::vector<std::pair<double, double>> pts;
    for (int n = 3; n <= 9; ++n) pts.emplace_back(n, n * std::pow(2.0, n));
    const auto fit = fit_timing_model(pts);
    EXPECT_NEAR(fit.prefactor, 1.0, 1e-9);
    EXPECT_NEAR(fit.exponent_scale, 1.0, 1e-9);
}

TEST(TimingModel, NeedsThreeDistinctOrders) {
    const std::vector<std::pair<double, double>> pts = {{4, 1.0}, {4, 1.1}, {5, 2.0}};
    EXPECT_LSBS_ERROR(fit_timing_model(pts), ErrorCategory::insufficient_data);
}
