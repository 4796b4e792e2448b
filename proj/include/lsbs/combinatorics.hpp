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

#ifndef LSBS_COMBINATORICS_HPP
#define LSBS_COMBINATORICS_HPP

#include <cstdint>

namespace lsbs {

/// log C(n, k); -inf when k < 0 or k > n.
double log_binomial(std::int64_t n, std::int64_t k);

/// C(n, k) as a double. Exact product for small arguments, log-space
/// otherwise. Returns 0 outside 0 <= k <= n.
double binomial(std::int64_t n, std::int64_t k);

/// m! / ((m-s-t)! s! t!); 0 when s + t > m or any argument negative.
double multinomial3(std::int64_t m, std::int64_t s, std::int64_t t);

/// C(n, k) as an exact integer, saturating at UINT64_MAX.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) noexcept;

/// base^exponent with the convention 0^0 = 1 and integer exponent >= 0.
double ipow(double base, std::int64_t exponent);

}  // namespace lsbs

#endif  // LSBS_COMBINATORICS_HPP
