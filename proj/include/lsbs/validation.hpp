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

#ifndef LSBS_VALIDATION_HPP
#define LSBS_VALIDATION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lsbs/distribution.hpp"

namespace lsbs {

/// Cumulative likelihood ratios V_k = prod_{j<=k} p_bs(e_j) / p_dist(e_j),
/// accumulated in log space.
std::vector<double> likelihood_trajectory(const OutputDistribution& p_bs, const OutputDistribution& p_dist,
                                          std::span<const FockState> events);

struct ValidationOptions {
    unsigned m = 20;
    unsigned n_detected = 3;
    LossConfig loss;
    /// When set, mix every split of loss.total() photons between input and
    /// output; split_weights[k] weights k input losses (empty = uniform).
    bool combine_splits = false;
    std::vector<double> split_weights;
    unsigned ensemble = 50;
    unsigned trials = 500;
    double confidence = 0.95;
    std::uint64_t seed = 1;
    /// Upper end of the linear search over N; unitaries that never reach the
    /// confidence level are reported at this value.
    unsigned max_samples = 5000;
};

struct UnitaryValidation {
    std::uint64_t unitary_seed = 0;
    unsigned min_samples = 0;
    bool capped = false;
    /// Expected log-ratio per event under the BS hypothesis.
    double kl_divergence = 0.0;
};

struct ValidationResult {
    unsigned m = 0;
    unsigned n_detected = 0;
    LossConfig loss;
    bool combine_splits = false;
    double min_samples_mean = 0.0;
    double min_samples_std = 0.0;
    unsigned unitaries_used = 0;
    unsigned trials_per_unitary = 0;
    double confidence = 0.95;
    unsigned capped = 0;
    std::vector<UnitaryValidation> per_unitary;
};

/// Minimum N such that at least `confidence` of the independent BS event
/// streams have V_N > 1, per Haar unitary; mean and sample standard
/// deviation over the ensemble. Heralded photons occupy the first
/// n_detected + losses modes.
ValidationResult min_samples_to_validate(const ValidationOptions& options);

/// Per-unitary search on prebuilt distributions (both renormalised over the
/// same family). Returns the minimum N, or `max_samples` with capped = true.
std::pair<unsigned, bool> min_samples_for_pair(const OutputDistribution& p_bs, const OutputDistribution& p_dist,
                                               unsigned trials, double confidence, unsigned max_samples,
                                               std::uint64_t seed);

struct SampleScalingFit {
    double a = 0.0;
    double b = 0.0;
    double residual_rms = 0.0;

    double predict(double n) const;
};

/// Least squares for min_samples = a + b n^-3; >= 3 distinct n.
SampleScalingFit fit_sample_scaling(std::span<const std::pair<double, double>> points);

}  // namespace lsbs

#endif  // LSBS_VALIDATION_HPP
