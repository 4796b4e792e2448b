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

#ifndef LSBS_HAAR_HPP
#define LSBS_HAAR_HPP

#include <cstddef>
#include <cstdint>

#include "lsbs/matrix.hpp"

namespace lsbs {

/// Haar-distributed m x m unitary. A matrix of i.i.d. standard complex
/// Gaussians is orthonormalised column by column (Gram-Schmidt, two passes),
/// which leaves the diagonal of R real and positive and makes Q Haar.
UnitaryMatrix haar_random_unitary(std::size_t m, std::uint64_t seed);

}  // namespace lsbs

#endif  // LSBS_HAAR_HPP
