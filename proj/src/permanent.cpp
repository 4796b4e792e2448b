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

#include "lsbs/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <omp.h>

#include "lsbs/error.hpp"

namespace lsbs {

namespace {

constexpr std::size_t kMaxBlockBits = 6;

void require_square(const ComplexMatrix& a) {
    if (!a.is_square()) {
        fail(ErrorCategory::invalid_dimension, "permanent needs a square matrix, got " + std::to_string(a.rows()) +
                                                   "x" + std::to_string(a.cols()));
    }
}

void require_glynn_order(const ComplexMatrix& a) {
    require_square(a);
    if (a.rows() > kGlynnMaxOrder) {
        fail(ErrorCategory::invalid_dimension, "Glynn kernel supports n <= " + std::to_string(kGlynnMaxOrder));
    }
}

// Signed sum of column-sum products over Gray-code indices [first, last).
// Bit b of gray(k) set means delta_{b+1} = -1; delta_0 is always +1.
Complex glynn_block(const ComplexMatrix& a, std::uint64_t first, std::uint64_t last, std::vector<Complex>& sums) {
    const std::size_t n = a.rows();
    const std::uint64_t gray_first = first ^ (first >> 1);
    for (std::size_t j = 0; j < n; ++j) sums[j] = a(0, j);
    for (std::size_t i = 1; i < n; ++i) {
        const bool negative = (gray_first >> (i - 1)) & 1u;
        for (std::size_t j = 0; j < n; ++j) sums[j] += negative ? -a(i, j) : a(i, j);
    }

    Complex total = 0.0;
    std::uint64_t k = first;
    while (true) {
        Complex product = sums[0];
        for (std::size_t j = 1; j < n; ++j) product *= sums[j];
        // popcount(gray(k)) has the parity of k.
        if (k & 1u) {
            total -= product;
        } else {
            total += product;
        }
        if (++k == last) break;
        const int bit = std::countr_zero(k);
        const std::uint64_t gray = k ^ (k >> 1);
        const Complex* row = a.row(static_cast<std::size_t>(bit) + 1).data();
        if ((gray >> bit) & 1u) {
            for (std::size_t j = 0; j < n; ++j) sums[j] -= 2.0 * row[j];
        } else {
            for (std::size_t j = 0; j < n; ++j) sums[j] += 2.0 * row[j];
        }
    }
    return total;
}

Complex glynn_blocks(const ComplexMatrix& a, std::size_t partitions) {
    const std::size_t n = a.rows();
    const std::size_t blocks = glynn_block_count(n);
    const std::uint64_t terms = std::uint64_t{1} << (n - 1);
    const std::uint64_t block_len = terms / blocks;
    const std::size_t groups = std::min(partitions, blocks);

    std::vector<Complex> partial(blocks);
    auto run_group = [&](std::size_t g) {
        std::vector<Complex> sums(n);
        const std::size_t lo = g * blocks / groups;
        const std::size_t hi = (g + 1) * blocks / groups;
        for (std::size_t b = lo; b < hi; ++b) partial[b] = glynn_block(a, b * block_len, (b + 1) * block_len, sums);
    };

    if (groups == 1) {
        run_group(0);
    } else {
        const auto group_count = static_cast<std::int64_t>(groups);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t g = 0; g < group_count; ++g) run_group(static_cast<std::size_t>(g));
    }

    Complex total = 0.0;
    for (const Complex& p : partial) total += p;
    return total * std::ldexp(1.0, 1 - static_cast<int>(n));
}

}  // namespace

std::size_t glynn_block_count(std::size_t n) noexcept {
    if (n <= 1) return 1;
    return std::size_t{1} << std::min(n - 1, kMaxBlockBits);
}

Complex permanent_naive(const ComplexMatrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    if (n > kNaivePermanentMaxOrder) {
        fail(ErrorCategory::oracle_scale_exceeded,
             "naive permanent is limited to n <= " + std::to_string(kNaivePermanentMaxOrder));
    }
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Complex total = 0.0;
    do {
        Complex term = 1.0;
        for (std::size_t i = 0; i < n; ++i) term *= a(i, sigma[i]);
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

Complex permanent_glynn(const ComplexMatrix& a) {
    require_glynn_order(a);
    return glynn_blocks(a, 1);
}

Complex permanent_glynn_parallel(const ComplexMatrix& a, std::size_t partitions) {
    require_glynn_order(a);
    if (partitions == 0) fail(ErrorCategory::invalid_configuration, "partitions must be >= 1");
    return glynn_blocks(a, partitions);
}

double TimingModel::predict(double n) const {
    return prefactor * n * std::exp2(exponent_scale * n);
}

TimingModel fit_timing_model(std::span<const std::pair<double, double>> measurements) {
    std::set<double> distinct;
    for (const auto& [n, t] : measurements) {
        if (!(n > 0.0) || !(t > 0.0)) {
            fail(ErrorCategory::invalid_configuration, "timing points need n > 0 and t > 0");
        }
        distinct.insert(n);
    }
    if (distinct.size() < 3) fail(ErrorCategory::insufficient_data, "timing fit needs >= 3 distinct n");

    const double count = static_cast<double>(measurements.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& [n, t] : measurements) {
        mean_x += n;
        mean_y += std::log(t / n);
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& [n, t] : measurements) {
        const double dx = n - mean_x;
        sxx += dx * dx;
        sxy += dx * (std::log(t / n) - mean_y);
    }
    const double slope = sxy / sxx;
    TimingModel model;
    model.exponent_scale = slope / std::log(2.0);
    model.prefactor = std::exp(mean_y - slope * mean_x);
    return model;
}

}  // namespace lsbs
