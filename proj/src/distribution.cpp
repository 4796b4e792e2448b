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

#include "lsbs/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "lsbs/combinatorics.hpp"
#include "lsbs/error.hpp"
#include "lsbs/permanent.hpp"
#include "lsbs/rng.hpp"

namespace lsbs {

namespace {

double factorial_of_repeats(std::span<const Mode> sorted_modes) {
    double result = 1.0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= sorted_modes.size(); ++i) {
        if (i < sorted_modes.size() && sorted_modes[i] == sorted_modes[i - 1]) {
            ++run;
            result *= static_cast<double>(run);
        } else {
            run = 1;
        }
    }
    return result;
}

// Evaluates transition probabilities from one fixed input into many outputs,
// reusing a scratch matrix.
class TransitionEvaluator {
 public:
    TransitionEvaluator(const UnitaryMatrix& u, std::vector<Mode> input_modes, ParticleModel model)
        : u_(u),
          input_(std::move(input_modes)),
          model_(model),
          input_factorials_(factorial_of_repeats(input_)),
          scratch_(input_.size(), input_.size()) {}

    double operator()(std::span<const Mode> output) {
        const std::size_t n = input_.size();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const Complex z = u_(output[r], input_[c]);
                scratch_(r, c) = model_ == ParticleModel::indistinguishable ? z : Complex(std::norm(z));
            }
        const Complex per = permanent_glynn(scratch_);
        const double output_factorials = factorial_of_repeats(output);
        if (model_ == ParticleModel::indistinguishable) return std::norm(per) / (input_factorials_ * output_factorials);
        // Real nonnegative matrix; clamp rounding noise.
        return std::max(per.real(), 0.0) / output_factorials;
    }

 private:
    const UnitaryMatrix& u_;
    std::vector<Mode> input_;
    ParticleModel model_;
    double input_factorials_;
    ComplexMatrix scratch_;
};

void check_pair(const UnitaryMatrix& u, const FockState& input, const FockState& output) {
    if (input.num_modes() != u.dim() || output.num_modes() != u.dim()) {
        fail(ErrorCategory::invalid_configuration, "Fock state length differs from the unitary dimension");
    }
    if (input.photons() != output.photons()) {
        fail(ErrorCategory::invalid_configuration, "input and output photon numbers differ");
    }
    if (input.photons() == 0) fail(ErrorCategory::invalid_configuration, "transition needs at least one photon");
}

std::vector<double> evaluate_basis(const UnitaryMatrix& u, const std::vector<Mode>& input_modes,
                                   const FockBasis& basis, ParticleModel model) {
    if (input_modes.size() > kGlynnMaxOrder) {
        fail(ErrorCategory::instance_too_large, "photon number exceeds the permanent kernel limit");
    }
    std::vector<double> probabilities(basis.size());
    const auto count = static_cast<std::int64_t>(basis.size());
#pragma omp parallel
    {
        TransitionEvaluator evaluate(u, input_modes, model);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            probabilities[static_cast<std::size_t>(i)] = evaluate(basis.modes(static_cast<std::size_t>(i)));
        }
    }
    return probabilities;
}

double ordered_sum(std::span<const double> values) {
    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

// Every way of removing `lost` photons from `occupations`, with the number of
// photon subsets realising it.
void for_each_reduction(std::span<const unsigned> occupations, unsigned lost,
                        const std::function<void(const std::vector<unsigned>&, double)>& visit) {
    std::vector<unsigned> kept(occupations.begin(), occupations.end());
    auto recurse = [&](auto&& self, std::size_t mode, unsigned remaining, double multiplicity) -> void {
        if (mode == occupations.size()) {
            if (remaining == 0) visit(kept, multiplicity);
            return;
        }
        const unsigned hi = std::min(remaining, occupations[mode]);
        for (unsigned drop = 0; drop <= hi; ++drop) {
            kept[mode] = occupations[mode] - drop;
            self(self, mode + 1, remaining - drop, multiplicity * binomial(occupations[mode], drop));
        }
        kept[mode] = occupations[mode];
    };
    recurse(recurse, 0, lost, 1.0);
}

}  // namespace

std::string_view model_name(ParticleModel model) noexcept {
    return model == ParticleModel::indistinguishable ? "indistinguishable" : "distinguishable";
}

ParticleModel parse_model(std::string_view text) {
    if (text == "indistinguishable" || text == "bs" || text == "indist") return ParticleModel::indistinguishable;
    if (text == "distinguishable" || text == "dist") return ParticleModel::distinguishable;
    fail(ErrorCategory::parse_error, "unknown particle model \"" + std::string(text) + "\"");
}

double bs_probability(const UnitaryMatrix& u, const FockState& input, const FockState& output) {
    return transition_probability(u, input, output, ParticleModel::indistinguishable);
}

double distinguishable_probability(const UnitaryMatrix& u, const FockState& input, const FockState& output) {
    return transition_probability(u, input, output, ParticleModel::distinguishable);
}

double transition_probability(const UnitaryMatrix& u, const FockState& input, const FockState& output,
                              ParticleModel model) {
    check_pair(u, input, output);
    TransitionEvaluator evaluate(u, input.mode_list(), model);
    const auto out = output.mode_list();
    return evaluate(out);
}

OutputDistribution::OutputDistribution(std::shared_ptr<const FockBasis> basis, std::vector<double> probabilities,
                                       double raw_mass, bool renormalized)
    : basis_(std::move(basis)),
      probabilities_(std::move(probabilities)),
      raw_mass_(raw_mass),
      renormalized_(renormalized) {
    if (!basis_ || probabilities_.size() != basis_->size()) {
        fail(ErrorCategory::invalid_distribution, "probability table does not match its basis");
    }
    for (double p : probabilities_) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            fail(ErrorCategory::invalid_distribution, "probabilities must be finite and nonnegative");
        }
    }
    if (renormalized_ && std::abs(ordered_sum(probabilities_) - 1.0) > 1e-9) {
        fail(ErrorCategory::invalid_distribution, "renormalized distribution does not sum to 1");
    }
}

double OutputDistribution::probability_of(const FockState& state) const {
    const auto index = basis_->index_of(state);
    return index ? probabilities_[*index] : 0.0;
}

OutputDistribution OutputDistribution::renormalize() const {
    const double mass = ordered_sum(probabilities_);
    if (!(mass > 0.0)) fail(ErrorCategory::invalid_distribution, "cannot renormalize a zero-mass distribution");
    std::vector<double> scaled(probabilities_);
    for (double& p : scaled) p /= mass;
    return OutputDistribution(basis_, std::move(scaled), renormalized_ ? raw_mass_ : mass, true);
}

OutputDistribution full_distribution(const UnitaryMatrix& u, const FockState& input, Family family,
                                     ParticleModel model, bool renormalize, const DistributionOptions& options) {
    if (input.num_modes() != u.dim()) {
        fail(ErrorCategory::invalid_configuration, "input length differs from the unitary dimension");
    }
    if (input.photons() == 0) fail(ErrorCategory::invalid_configuration, "distribution needs n >= 1");
    auto basis = std::make_shared<const FockBasis>(u.dim(), input.photons(), family, options.max_entries);
    auto probabilities = evaluate_basis(u, input.mode_list(), *basis, model);
    const double mass = ordered_sum(probabilities);
    OutputDistribution raw(std::move(basis), std::move(probabilities), mass, false);
    return renormalize ? raw.renormalize() : raw;
}

OutputDistribution lossy_distribution(const UnitaryMatrix& u, const FockState& heralded, LossConfig loss,
                                      ParticleModel model, const DistributionOptions& options) {
    if (heralded.num_modes() != u.dim()) {
        fail(ErrorCategory::invalid_configuration, "heralded state length differs from the unitary dimension");
    }
    const std::size_t n_her = heralded.photons();
    if (loss.total() >= n_her) {
        fail(ErrorCategory::invalid_configuration, "losses must leave at least one detected photon");
    }
    const std::size_t m = u.dim();
    const std::size_t n_prop = n_her - loss.n_lost_in;
    const std::size_t n_det = n_prop - loss.n_lost_out;

    auto propagated = std::make_shared<const FockBasis>(m, n_prop, Family::collision_free, options.max_entries);
    auto detected = loss.n_lost_out == 0
                        ? propagated
                        : std::make_shared<const FockBasis>(m, n_det, Family::collision_free, options.max_entries);

    std::vector<double> accumulated(detected->size(), 0.0);
    const double input_norm = binomial(static_cast<std::int64_t>(n_her), loss.n_lost_in);
    const double output_norm = binomial(static_cast<std::int64_t>(n_prop), loss.n_lost_out);

    // Positions of the photons that survive output loss, as a bitmask walk
    // over combinations of n_det out of n_prop.
    std::vector<std::vector<std::size_t>> keep_sets;
    if (loss.n_lost_out > 0) {
        std::vector<bool> pick(n_prop, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n_det), true);
        do {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < n_prop; ++i)
                if (pick[i]) keep.push_back(i);
            keep_sets.push_back(std::move(keep));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }

    for_each_reduction(heralded.occupations(), loss.n_lost_in, [&](const std::vector<unsigned>& kept, double mult) {
        const double weight = mult / input_norm;
        const auto input_modes = FockState(kept).mode_list();
        const auto probabilities = evaluate_basis(u, input_modes, *propagated, model);
        if (loss.n_lost_out == 0) {
            for (std::size_t i = 0; i < probabilities.size(); ++i) accumulated[i] += weight * probabilities[i];
            return;
        }
        std::vector<Mode> sub(n_det);
        for (std::size_t i = 0; i < probabilities.size(); ++i) {
            if (probabilities[i] == 0.0) continue;
            const auto modes = propagated->modes(i);
            const double share = weight * probabilities[i] / output_norm;
            for (const auto& keep : keep_sets) {
                for (std::size_t k = 0; k < n_det; ++k) sub[k] = modes[keep[k]];
                accumulated[*detected->index_of_modes(sub)] += share;
            }
        }
    });

    const double mass = ordered_sum(accumulated);
    return OutputDistribution(detected, std::move(accumulated), mass, false).renormalize();
}

OutputDistribution combined_loss_distribution(const UnitaryMatrix& u, const FockState& heralded, unsigned n_lost,
                                              ParticleModel model, std::span<const double> split_weights,
                                              const DistributionOptions& options) {
    std::vector<double> weights(split_weights.begin(), split_weights.end());
    if (weights.empty()) weights.assign(n_lost + 1, 1.0);
    if (weights.size() != n_lost + 1) {
        fail(ErrorCategory::invalid_configuration, "split weights need n_lost + 1 entries");
    }
    double weight_total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) fail(ErrorCategory::invalid_configuration, "split weights must be nonnegative");
        weight_total += w;
    }
    if (!(weight_total > 0.0)) fail(ErrorCategory::invalid_configuration, "split weights sum to zero");

    std::shared_ptr<const FockBasis> basis;
    std::vector<double> mixture;
    double raw_mass = 0.0;
    for (unsigned k = 0; k <= n_lost; ++k) {
        if (weights[k] == 0.0) continue;
        const double w = weights[k] / weight_total;
        const auto part = lossy_distribution(u, heralded, LossConfig{k, n_lost - k}, model, options);
        if (!basis) {
            basis = std::make_shared<const FockBasis>(part.basis());
            mixture.assign(part.size(), 0.0);
        }
        for (std::size_t i = 0; i < part.size(); ++i) mixture[i] += w * part.probability(i);
        raw_mass += w * part.raw_mass();
    }
    return OutputDistribution(basis, std::move(mixture), raw_mass, false).renormalize();
}

double total_variation_distance(const OutputDistribution& p, const OutputDistribution& q) {
    if (p.family() != q.family() || p.num_modes() != q.num_modes() || p.n_detected() != q.n_detected()) {
        fail(ErrorCategory::invalid_comparison, "distributions are over different output families");
    }
    if (!p.renormalized() || !q.renormalized()) {
        fail(ErrorCategory::invalid_comparison, "total variation distance needs renormalized distributions");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) total += std::abs(p.probability(i) - q.probability(i));
    return std::clamp(0.5 * total, 0.0, 1.0);
}

CdfSampler::CdfSampler(const OutputDistribution& dist) : cumulative_(dist.size()) {
    if (!dist.renormalized()) fail(ErrorCategory::invalid_distribution, "sampling needs a renormalized distribution");
    double running = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        running += dist.probability(i);
        cumulative_[i] = running;
    }
}

std::size_t CdfSampler::operator()(double uniform) const {
    const double target = uniform * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) {
        // Rounding pushed the target past the last step: take the last entry
        // with positive mass.
        it = std::lower_bound(cumulative_.begin(), cumulative_.end(), cumulative_.back());
    }
    return static_cast<std::size_t>(it - cumulative_.begin());
}

std::vector<std::size_t> sample_indices(const OutputDistribution& dist, std::uint64_t seed, std::size_t count) {
    const CdfSampler sampler(dist);
    Rng rng(seed);
    std::vector<std::size_t> out(count);
    for (auto& index : out) index = sampler(rng.uniform());
    return out;
}

std::vector<FockState> sample_events(const OutputDistribution& dist, std::uint64_t seed, std::size_t count) {
    std::vector<FockState> events;
    events.reserve(count);
    for (std::size_t index : sample_indices(dist, seed, count)) events.push_back(dist.state(index));
    return events;
}

std::string distribution_to_csv(const OutputDistribution& dist) {
    std::string out = "state,probability\n";
    char buffer[64];
    for (std::size_t i = 0; i < dist.size(); ++i) {
        std::snprintf(buffer, sizeof buffer, ",%.17g\n", dist.probability(i));
        out += dist.state(i).to_string();
        out += buffer;
    }
    return out;
}

std::string distribution_to_json(const OutputDistribution& dist) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < dist.size(); ++i) {
        entries.push_back({{"state", dist.state(i).to_string()}, {"p", dist.probability(i)}});
    }
    nlohmann::json doc = {{"m", dist.num_modes()},
                          {"n", dist.n_detected()},
                          {"family", family_name(dist.family())},
                          {"renormalized", dist.renormalized()},
                          {"raw_mass", dist.raw_mass()},
                          {"entries", std::move(entries)}};
    return doc.dump();
}

OutputDistribution distribution_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto m = doc.at("m").get<std::size_t>();
        const auto n = doc.at("n").get<std::size_t>();
        const Family family = parse_family(doc.at("family").get<std::string>());
        const bool renormalized = doc.at("renormalized").get<bool>();
        const double raw_mass = doc.at("raw_mass").get<double>();
        const auto& entries = doc.at("entries");
        auto basis = std::make_shared<const FockBasis>(m, n, family, entries.size());
        if (basis->size() != entries.size()) {
            fail(ErrorCategory::parse_error, "distribution JSON does not list every state of its family");
        }
        std::vector<double> probabilities(basis->size(), 0.0);
        std::vector<bool> seen(basis->size(), false);
        for (const auto& entry : entries) {
            const auto state = FockState::parse(entry.at("state").get<std::string>());
            const auto index = basis->index_of(state);
            if (!index || seen[*index]) fail(ErrorCategory::parse_error, "bad or repeated state " + state.to_string());
            seen[*index] = true;
            probabilities[*index] = entry.at("p").get<double>();
        }
        return OutputDistribution(std::move(basis), std::move(probabilities), raw_mass, renormalized);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCategory::parse_error, std::string("distribution JSON: ") + e.what());
    } catch (const Error& e) {
        if (e.category() == ErrorCategory::instance_too_large) {
            fail(ErrorCategory::parse_error, "distribution JSON does not list every state of its family");
        }
        throw;
    }
}

}  // namespace lsbs
