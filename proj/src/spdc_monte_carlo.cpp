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

#include "lsbs/spdc_monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lsbs/error.hpp"
#include "lsbs/rng.hpp"

namespace lsbs {

namespace {

constexpr std::uint64_t kChunkTrials = 1 << 16;

struct Counts {
    std::uint64_t success = 0;
    std::uint64_t fake = 0;
    std::uint64_t lossy = 0;
};

void run_chunk(unsigned m, unsigned n, unsigned n_lost, const SpdcParams& params, std::uint64_t trials,
               std::uint64_t seed, Counts& counts) {
    Rng rng(seed);
    const double g = params.g;
    const double single_or_double = g + g * g;
    std::vector<unsigned> heralded;
    heralded.reserve(m);
    for (std::uint64_t shot = 0; shot < trials; ++shot) {
        heralded.clear();
        unsigned clicks = 0;
        for (unsigned source = 0; source < m; ++source) {
            const double u = rng.uniform();
            const unsigned pairs = u < g ? 1u : (u < single_or_double ? 2u : 0u);
            if (pairs == 0) continue;
            bool click = false;
            for (unsigned k = 0; k < pairs; ++k) click = rng.bernoulli(params.eta_T) || click;
            if (click) {
                ++clicks;
                heralded.push_back(pairs);
            }
        }
        if (clicks != n) continue;

        bool one_each = true;
        bool at_most_one = true;
        unsigned detected = 0;
        for (unsigned pairs : heralded) {
            unsigned injected = 0;
            for (unsigned k = 0; k < pairs; ++k) {
                if (!rng.bernoulli(params.p_in)) continue;
                ++injected;
                if (rng.bernoulli(params.eta_D)) ++detected;
            }
            one_each = one_each && injected == 1;
            at_most_one = at_most_one && injected <= 1;
        }
        if (detected == n) {
            if (one_each) {
                ++counts.success;
            } else {
                ++counts.fake;
            }
        }
        if (n_lost >= 1 && at_most_one && detected + n_lost == n) ++counts.lossy;
    }
}

Estimate make_estimate(std::uint64_t count, std::uint64_t trials) {
    Estimate e;
    e.count = count;
    e.probability = static_cast<double>(count) / static_cast<double>(trials);
    e.standard_error = std::sqrt(e.probability * (1.0 - e.probability) / static_cast<double>(trials));
    return e;
}

}  // namespace

double Estimate::z_score(double value) const {
    const double diff = std::abs(value - probability);
    if (standard_error > 0.0) return diff / standard_error;
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

SpdcMonteCarloResult monte_carlo_spdc(unsigned m, unsigned n, unsigned n_lost, const SpdcParams& params,
                                      std::uint64_t trials, std::uint64_t seed) {
    if (n < 1 || n > m) fail(ErrorCategory::invalid_configuration, "need 1 <= n <= m");
    if (n_lost >= n) fail(ErrorCategory::invalid_configuration, "n_lost must be smaller than n");
    if (trials < 10'000) fail(ErrorCategory::invalid_configuration, "Monte Carlo needs at least 10^4 trials");
    params.validate();

    const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<Counts> per_chunk(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const auto chunk = static_cast<std::uint64_t>(c);
        const std::uint64_t begin = chunk * kChunkTrials;
        const std::uint64_t size = std::min(kChunkTrials, trials - begin);
        run_chunk(m, n, n_lost, params, size, derive_seed(seed, chunk), per_chunk[chunk]);
    }

    Counts total;
    for (const auto& c : per_chunk) {
        total.success += c.success;
        total.fake += c.fake;
        total.lossy += c.lossy;
    }
    SpdcMonteCarloResult result;
    result.trials = trials;
    result.success = make_estimate(total.success, trials);
    result.fake = make_estimate(total.fake, trials);
    result.lossy = make_estimate(total.lossy, trials);
    return result;
}

}  // namespace lsbs
