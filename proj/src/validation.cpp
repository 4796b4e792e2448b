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

#include "lsbs/validation.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <set>

#include "lsbs/error.hpp"
#include "lsbs/haar.hpp"
#include "lsbs/rng.hpp"

namespace lsbs {

namespace {

void check_same_family(const OutputDistribution& p, const OutputDistribution& q) {
    if (p.family() != q.family() || p.num_modes() != q.num_modes() || p.n_detected() != q.n_detected()) {
        fail(ErrorCategory::invalid_comparison, "hypotheses are over different output families");
    }
    if (!p.renormalized() || !q.renormalized()) {
        fail(ErrorCategory::invalid_comparison, "hypotheses must be renormalized");
    }
}

// log p_bs - log p_dist per entry; NaN where the BS hypothesis is zero and
// +inf where only the alternative is zero.
std::vector<double> log_ratios(const OutputDistribution& p_bs, const OutputDistribution& p_dist) {
    std::vector<double> out(p_bs.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double a = p_bs.probability(i);
        const double b = p_dist.probability(i);
        if (a == 0.0) {
            out[i] = std::numeric_limits<double>::quiet_NaN();
        } else if (b == 0.0) {
            out[i] = std::numeric_limits<double>::infinity();
        } else {
            out[i] = std::log(a) - std::log(b);
        }
    }
    return out;
}

}  // namespace

std::vector<double> likelihood_trajectory(const OutputDistribution& p_bs, const OutputDistribution& p_dist,
                                          std::span<const FockState> events) {
    check_same_family(p_bs, p_dist);
    std::vector<double> out;
    out.reserve(events.size());
    double log_v = 0.0;
    for (const auto& event : events) {
        const auto index = p_bs.index_of(event);
        if (!index) fail(ErrorCategory::invalid_comparison, "event " + event.to_string() + " is outside the family");
        const double b = p_dist.probability(*index);
        if (b == 0.0) {
            fail(ErrorCategory::degenerate_hypothesis,
                 "alternative hypothesis assigns zero probability to " + event.to_string());
        }
        log_v += std::log(p_bs.probability(*index)) - std::log(b);
        out.push_back(std::exp(log_v));
    }
    return out;
}

std::pair<unsigned, bool> min_samples_for_pair(const OutputDistribution& p_bs, const OutputDistribution& p_dist,
                                               unsigned trials, double confidence, unsigned max_samples,
                                               std::uint64_t seed) {
    check_same_family(p_bs, p_dist);
    if (trials == 0 || max_samples == 0) fail(ErrorCategory::invalid_configuration, "need trials and max_samples >= 1");
    const auto ratios = log_ratios(p_bs, p_dist);
    const CdfSampler sampler(p_bs);

    std::vector<Rng> streams;
    streams.reserve(trials);
    for (unsigned t = 0; t < trials; ++t) streams.emplace_back(derive_seed(seed, t));
    std::vector<double> log_v(trials, 0.0);
    const double needed = confidence * static_cast<double>(trials);

    for (unsigned n = 1; n <= max_samples; ++n) {
        unsigned above = 0;
        for (unsigned t = 0; t < trials; ++t) {
            const double r = ratios[sampler(streams[t].uniform())];
            if (std::isinf(r)) {
                fail(ErrorCategory::degenerate_hypothesis, "alternative hypothesis assigns zero probability to an event");
            }
            log_v[t] += r;
            if (log_v[t] > 0.0) ++above;
        }
        if (static_cast<double>(above) >= needed) return {n, false};
    }
    return {max_samples, true};
}

ValidationResult min_samples_to_validate(const ValidationOptions& options) {
    if (options.ensemble < 10) fail(ErrorCategory::invalid_configuration, "ensemble must hold at least 10 unitaries");
    if (options.trials < 200) fail(ErrorCategory::invalid_configuration, "need at least 200 trials per unitary");
    if (!(options.confidence > 0.0 && options.confidence < 1.0)) {
        fail(ErrorCategory::invalid_configuration, "confidence must lie in (0, 1)");
    }
    if (options.n_detected < 1) fail(ErrorCategory::invalid_configuration, "need at least one detected photon");
    const unsigned n_her = options.n_detected + options.loss.total();
    if (n_her > options.m) fail(ErrorCategory::invalid_dimension, "more heralded photons than modes");
    if (options.combine_splits && options.loss.total() == 0) {
        fail(ErrorCategory::invalid_configuration, "combined splits need at least one lost photon");
    }

    const FockState heralded = FockState::leading_ones(options.m, n_her);
    std::vector<UnitaryValidation> per_unitary(options.ensemble);
    std::vector<std::exception_ptr> errors(options.ensemble);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(options.ensemble); ++k) {
        const auto u_index = static_cast<std::uint64_t>(k);
        try {
            UnitaryValidation& out = per_unitary[u_index];
            out.unitary_seed = derive_seed(options.seed, 2 * u_index);
            const UnitaryMatrix u = haar_random_unitary(options.m, out.unitary_seed);
            auto build = [&](ParticleModel model) {
                if (options.combine_splits) {
                    return combined_loss_distribution(u, heralded, options.loss.total(), model, options.split_weights);
                }
                return lossy_distribution(u, heralded, options.loss, model);
            };
            const auto p_bs = build(ParticleModel::indistinguishable);
            const auto p_dist = build(ParticleModel::distinguishable);
            const auto [samples, capped] =
                min_samples_for_pair(p_bs, p_dist, options.trials, options.confidence, options.max_samples,
                                     derive_seed(options.seed, 2 * u_index + 1));
            out.min_samples = samples;
            out.capped = capped;
            const auto ratios = log_ratios(p_bs, p_dist);
            double kl = 0.0;
            for (std::size_t i = 0; i < ratios.size(); ++i)
                if (p_bs.probability(i) > 0.0) kl += p_bs.probability(i) * ratios[i];
            out.kl_divergence = kl;
        } catch (...) {
            errors[u_index] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    ValidationResult result;
    result.m = options.m;
    result.n_detected = options.n_detected;
    result.loss = options.loss;
    result.combine_splits = options.combine_splits;
    result.unitaries_used = options.ensemble;
    result.trials_per_unitary = options.trials;
    result.confidence = options.confidence;
    double sum = 0.0;
    for (const auto& v : per_unitary) {
        sum += v.min_samples;
        if (v.capped) ++result.capped;
    }
    result.min_samples_mean = sum / options.ensemble;
    double sq = 0.0;
    for (const auto& v : per_unitary) sq += (v.min_samples - result.min_samples_mean) * (v.min_samples - result.min_samples_mean);
    result.min_samples_std = std::sqrt(sq / (options.ensemble - 1));
    result.per_unitary = std::move(per_unitary);
    return result;
}

double SampleScalingFit::predict(double n) const { return a + b / (n * n * n); }

SampleScalingFit fit_sample_scaling(std::span<const std::pair<double, double>> points) {
    std::set<double> distinct;
    for (const auto& [n, s] : points) {
        if (!(n > 0.0) || !std::isfinite(s)) fail(ErrorCategory::invalid_configuration, "fit points need n > 0");
        distinct.insert(n);
    }
    if (distinct.size() < 3) fail(ErrorCategory::insufficient_data, "scaling fit needs at least 3 distinct n");

    const double count = static_cast<double>(points.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [n, s] : points) {
        sx += 1.0 / (n * n * n);
        sy += s;
    }
    const double mx = sx / count;
    const double my = sy / count;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [n, s] : points) {
        const double dx = 1.0 / (n * n * n) - mx;
        sxx += dx * dx;
        sxy += dx * (s - my);
    }
    SampleScalingFit fit;
    fit.b = sxy / sxx;
    fit.a = my - fit.b * mx;
    double rss = 0.0;
    for (const auto& [n, s] : points) {
        const double r = s - fit.predict(n);
        rss += r * r;
    }
    fit.residual_rms = std::sqrt(rss / count);
    return fit;
}

}  // namespace lsbs
