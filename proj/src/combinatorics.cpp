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

#include "lsbs/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lsbs {

double log_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    if (n <= 66) {
        // Every partial product is itself a binomial coefficient, so the
        // running value stays integral and exact below 2^53.
        double result = 1.0;
        for (std::int64_t i = 1; i <= k; ++i) {
            result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
        }
        return std::round(result);
    }
    return std::exp(log_binomial(n, k));
}

double multinomial3(std::int64_t m, std::int64_t s, std::int64_t t) {
    if (m < 0 || s < 0 || t < 0 || s + t > m) return 0.0;
    return binomial(m, s + t) * binomial(s + t, s);
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(result);
}

double ipow(double base, std::int64_t exponent) {
    if (exponent == 0) return 1.0;
    return std::pow(base, static_cast<double>(exponent));
}

}  // namespace lsbs
