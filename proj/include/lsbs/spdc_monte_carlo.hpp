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

#ifndef LSBS_SPDC_MONTE_CARLO_HPP
#define LSBS_SPDC_MONTE_CARLO_HPP

#include <cstdint>

#include "lsbs/sources.hpp"

namespace lsbs {

struct Estimate {
    std::uint64_t count = 0;
    double probability = 0.0;
    double standard_error = 0.0;

    /// |value - probability| in units of the standard error (inf if the
    /// error is zero and the values differ).
    double z_score(double value) const;
};

struct SpdcMonteCarloResult {
    std::uint64_t trials = 0;
    Estimate success;
    Estimate fake;
    Estimate lossy;
};

/// Shot-by-shot simulation of the scattershot source chain: 0/1/2 pairs per
/// source, per-photon trigger detection, shutters open only on clicked modes,
/// per-photon injection and output detection.
///
/// Classes (all require exactly n trigger clicks):
///  - success: every heralded mode injects one photon and n are detected;
///  - fake: n detected but the injected state differs from one photon per
///    heralded mode;
///  - lossy: no heralded mode injects more than one photon and exactly
///    n - n_lost are detected (n_lost >= 1; empty class for n_lost = 0).
///
/// Trials are processed in fixed chunks with seeds derived from (seed, chunk),
/// so the counts do not depend on the thread count.
SpdcMonteCarloResult monte_carlo_spdc(unsigned m, unsigned n, unsigned n_lost, const SpdcParams& params,
                                      std::uint64_t trials, std::uint64_t seed);

}  // namespace lsbs

#endif  // LSBS_SPDC_MONTE_CARLO_HPP
