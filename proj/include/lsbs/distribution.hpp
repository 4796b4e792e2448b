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

#ifndef LSBS_DISTRIBUTION_HPP
#define LSBS_DISTRIBUTION_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsbs/fock.hpp"
#include "lsbs/matrix.hpp"

namespace lsbs {

enum class ParticleModel { indistinguishable, distinguishable };

std::string_view model_name(ParticleModel model) noexcept;
ParticleModel parse_model(std::string_view text);

/// |per(U_{S,T})|^2 / (prod s_i! prod t_j!)
double bs_probability(const UnitaryMatrix& u, const FockState& input, const FockState& output);
/// per(|U_{S,T}|^2) / prod t_j!
double distinguishable_probability(const UnitaryMatrix& u, const FockState& input, const FockState& output);
double transition_probability(const UnitaryMatrix& u, const FockState& input, const FockState& output,
                              ParticleModel model);

struct LossConfig {
    unsigned n_lost_in = 0;
    unsigned n_lost_out = 0;

    unsigned total() const noexcept { return n_lost_in + n_lost_out; }
    friend bool operator==(const LossConfig&, const LossConfig&) = default;
};

struct DistributionOptions {
    std::uint64_t max_entries = 5'000'000;
};

/// Probability table over every state of one Fock family.
class OutputDistribution {
 public:
    OutputDistribution(std::shared_ptr<const FockBasis> basis, std::vector<double> probabilities,
                       double raw_mass, bool renormalized);

    std::size_t num_modes() const noexcept { return basis_->num_modes(); }
    std::size_t n_detected() const noexcept { return basis_->photons(); }
    Family family() const noexcept { return basis_->family(); }
    std::size_t size() const noexcept { return probabilities_.size(); }

    /// Mass before renormalisation (equal to the current mass if never renormalised).
    double raw_mass() const noexcept { return raw_mass_; }
    bool renormalized() const noexcept { return renormalized_; }

    double probability(std::size_t index) const { return probabilities_[index]; }
    std::span<const double> probabilities() const noexcept { return probabilities_; }
    FockState state(std::size_t index) const { return basis_->state(index); }
    const FockBasis& basis() const noexcept { return *basis_; }
    std::optional<std::size_t> index_of(const FockState& state) const { return basis_->index_of(state); }
    /// Probability of `state`; 0 for states outside the family.
    double probability_of(const FockState& state) const;

    /// Copy scaled to unit mass. Fails with invalid_distribution on zero mass.
    OutputDistribution renormalize() const;

 private:
    std::shared_ptr<const FockBasis> basis_;
    std::vector<double> probabilities_;
    double raw_mass_;
    bool renormalized_;
};

/// Enumerates the family and evaluates every output of `input`.
OutputDistribution full_distribution(const UnitaryMatrix& u, const FockState& input, Family family,
                                     ParticleModel model, bool renormalize,
                                     const DistributionOptions& options = {});

/// Collision-free distribution of the photons detected after losses.
///
/// Input losses: uniform average over every way of dropping n_lost_in
/// photons from `heralded` (for singly occupied inputs, the C(n_her, n_lost_in)
/// subsets). Output losses: each collision-free output of the propagated
/// photons is spread uniformly over its sub-patterns with n_lost_out photons
/// removed. The result is renormalised over the detected family.
OutputDistribution lossy_distribution(const UnitaryMatrix& u, const FockState& heralded, LossConfig loss,
                                      ParticleModel model, const DistributionOptions& options = {});

/// Mixture over the splits n_lost_in + n_lost_out = n_lost of the
/// lossy_distribution results. `split_weights[k]` weights n_lost_in = k;
/// empty means uniform. Weights are normalised internally.
OutputDistribution combined_loss_distribution(const UnitaryMatrix& u, const FockState& heralded,
                                              unsigned n_lost, ParticleModel model,
                                              std::span<const double> split_weights = {},
                                              const DistributionOptions& options = {});

/// 1/2 sum_i |p_i - q_i|. Both inputs renormalised over the same family.
double total_variation_distance(const OutputDistribution& p, const OutputDistribution& q);

/// Entry indices drawn i.i.d. by inverse CDF.
std::vector<std::size_t> sample_indices(const OutputDistribution& dist, std::uint64_t seed, std::size_t count);
std::vector<FockState> sample_events(const OutputDistribution& dist, std::uint64_t seed, std::size_t count);

/// Cumulative probabilities used by the inverse-CDF samplers.
class CdfSampler {
 public:
    explicit CdfSampler(const OutputDistribution& dist);
    /// Index for a uniform variate on [0, 1).
    std::size_t operator()(double uniform) const;

 private:
    std::vector<double> cumulative_;
};

std::string distribution_to_csv(const OutputDistribution& dist);
std::string distribution_to_json(const OutputDistribution& dist);
OutputDistribution distribution_from_json(const std::string& text);

}  // namespace lsbs

#endif  // LSBS_DISTRIBUTION_HPP
