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

#include "lsbs/haar.hpp"

#include <cmath>
#include <vector>

#include "lsbs/error.hpp"
#include "lsbs/rng.hpp"

namespace lsbs {

UnitaryMatrix haar_random_unitary(std::size_t m, std::uint64_t seed) {
    if (m == 0) fail(ErrorCategory::invalid_dimension, "Haar unitary needs m >= 1");
    Rng rng(seed);
    const double scale = 1.0 / std::sqrt(2.0);

    // Columns stored contiguously: q[c * m + r].
    std::vector<Complex> q(m * m);
    for (auto& z : q) {
        const double re = rng.normal();
        const double im = rng.normal();
        z = Complex(re * scale, im * scale);
    }

    for (std::size_t c = 0; c < m; ++c) {
        Complex* col = q.data() + c * m;
        // Two passes of modified Gram-Schmidt keep the columns orthogonal to
        // machine precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < c; ++k) {
                const Complex* prev = q.data() + k * m;
                Complex dot = 0.0;
                for (std::size_t r = 0; r < m; ++r) dot += std::conj(prev[r]) * col[r];
                for (std::size_t r = 0; r < m; ++r) col[r] -= dot * prev[r];
            }
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < m; ++r) norm2 += std::norm(col[r]);
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < m; ++r) col[r] *= inv;
    }

    ComplexMatrix u(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) u(r, c) = q[c * m + r];
    return UnitaryMatrix(std::move(u));
}

}  // namespace lsbs
