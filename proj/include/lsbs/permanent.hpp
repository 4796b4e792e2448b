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

#ifndef LSBS_PERMANENT_HPP
#define LSBS_PERMANENT_HPP

#include <cstddef>
#include <span>
#include <utility>

#include "lsbs/matrix.hpp"

namespace lsbs {

inline constexpr std::size_t kNaivePermanentMaxOrder = 10;
inline constexpr std::size_t kGlynnMaxOrder = 30;

/// Serial reference: explicit sum over all n! permutations. Kept as the
/// oracle for the Glynn kernels; refuses n > 10.
Complex permanent_naive(const ComplexMatrix& a);

/// Glynn's formula with the delta vectors visited in Gray-code order, one
/// row flip and an O(n) column-sum update per step.
///
/// The 2^(n-1) delta vectors are cut into a fixed number of contiguous
/// Gray-code blocks (min(2^(n-1), 64)); every block is seeded with directly
/// computed column sums and its partial sum is stored in its own slot. The
/// slots are reduced in block order, so the value does not depend on how
/// blocks are handed out to workers.
Complex permanent_glynn(const ComplexMatrix& a);

/// Same blocks as permanent_glynn, distributed over `partitions` contiguous
/// groups run on OpenMP threads. Bit-identical to permanent_glynn for every
/// partition count and thread count.
Complex permanent_glynn_parallel(const ComplexMatrix& a, std::size_t partitions);

/// Number of Gray-code blocks used for an n x n matrix.
std::size_t glynn_block_count(std::size_t n) noexcept;

/// Permanent model t(n) = prefactor * n * 2^(exponent_scale * n).
struct TimingModel {
    double prefactor = 0.0;
    double exponent_scale = 0.0;

    double predict(double n) const;
};

/// Least-squares fit of log(t/n) = log(prefactor) + exponent_scale * n * log 2
/// with equal weights. Needs >= 3 distinct n and positive times.
TimingModel fit_timing_model(std::span<const std::pair<double, double>> measurements);

}  // namespace lsbs

#endif  // LSBS_PERMANENT_HPP
