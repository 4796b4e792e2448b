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

#ifndef LSBS_RNG_HPP
#define LSBS_RNG_HPP

#include <cstdint>
#include <random>

namespace lsbs {

/// Child seed for stream `index` of `parent`. Every random quantity in the
/// library is drawn from a stream reached by a chain of these derivations
/// from the single user seed, so results never depend on which thread ran
/// which stream.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept;

/// Portable random source. std::mt19937_64 output is fixed by the standard;
/// the std distributions are not, so the conversions to doubles live here.
class Rng {
 public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal via Box-Muller; the second variate is cached.
    double normal();

 private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace lsbs

#endif  // LSBS_RNG_HPP
