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

#include "lsbs/supremacy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>

#include "lsbs/combinatorics.hpp"
#include "lsbs/error.hpp"

namespace lsbs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double finite_or_inf(double log_value) {
    const double v = std::exp(log_value);
    return std::isfinite(v) ? v : kInf;
}

double inverse_rate(double rate, double probability) {
    if (!(probability > 0.0)) return kInf;
    const double t = 1.0 / (rate * probability);
    return std::isfinite(t) ? t : kInf;
}

struct Contribution {
    double probability = 0.0;
    double cost = 0.0;
};

struct ClassTotals {
    double probability = 0.0;
    double weighted_cost = 0.0;
    double plain_cost = 0.0;
    unsigned terms = 0;

    void add(const Contribution& c) {
        probability += c.probability;
        weighted_cost += c.probability * c.cost;
        plain_cost += c.cost;
        ++terms;
    }
};

SupremacyPoint make_point(unsigned m, const std::string& policy, EventClass cls, unsigned lost,
                          const ClassTotals& totals, double rate) {
    SupremacyPoint p;
    p.m = m;
    p.n_policy = policy;
    p.event_class = cls;
    p.lost = lost;
    if (totals.probability > 0.0) {
        p.t_c = totals.weighted_cost / totals.probability;
        p.t_q = inverse_rate(rate, totals.probability);
    } else {
        p.t_c = totals.terms ? totals.plain_cost / totals.terms : 0.0;
        p.t_q = kInf;
    }
    p.ratio = std::isinf(p.t_q) ? 0.0 : p.t_c / p.t_q;
    return p;
}

std::vector<SupremacyPoint> sweep_point(const SweepConfig& config, unsigned m) {
    const auto ns = config.n_policy.photon_numbers(m);
    if (ns.empty()) return {};
    const std::string policy = config.n_policy.describe();
    const unsigned k_max = config.platform == Platform::qd ? std::min(config.include_lossy_up_to, 1u)
                                                           : config.include_lossy_up_to;

    double rate = 0.0;
    SpdcParams spdc = config.spdc;
    QdParams qd = config.qd;
    switch (config.platform) {
        case Platform::spdc:
            spdc = spdc.with_eta_D(config.eta_D_schedule.at(m));
            rate = spdc.pump_rate;
            break;
        case Platform::qd:
            qd = qd.with_eta_D(config.eta_D_schedule.at(m));
            rate = qd.rep_rate;
            break;
        case Platform::mw:
            rate = 1.0 / (m * config.mw.t_step);
            break;
    }

    ClassTotals exact;
    std::vector<ClassTotals> lossy(k_max + 1);
    ClassTotals generalized;
    for (unsigned n : ns) {
        Contribution e;
        e.cost = t_classical(m, n, config.a_prime);
        switch (config.platform) {
            case Platform::spdc: e.probability = p_sbs(m, n, spdc); break;
            case Platform::qd: e.probability = p_qd(n, n, qd, config.demux); break;
            case Platform::mw: e.probability = p_mw_lossy(n, 0, config.mw); break;
        }
        exact.add(e);
        generalized.add(e);
        for (unsigned k = 1; k <= k_max && k < n; ++k) {
            Contribution l;
            l.cost = t_classical_lossy_mixed(m, n - k, k, config.a_prime);
            switch (config.platform) {
                case Platform::spdc: l.probability = p_sbs_lossy(m, n, k, spdc); break;
                case Platform::qd: l.probability = p_qd_one_lost(n, n, qd, config.demux); break;
                case Platform::mw:
                    l.probability = config.include_dark ? p_mw_lossy_dark(m, n, k, config.mw)
                                                        : p_mw_lossy(n, k, config.mw);
                    break;
            }
            lossy[k].add(l);
            generalized.add(l);
        }
    }

    std::vector<SupremacyPoint> out;
    out.push_back(make_point(m, policy, EventClass::exact, 0, exact, rate));
    for (unsigned k = 1; k <= k_max; ++k) {
        if (lossy[k].terms) out.push_back(make_point(m, policy, EventClass::lossy, k, lossy[k], rate));
    }
    if (k_max > 0) out.push_back(make_point(m, policy, EventClass::generalized, k_max, generalized, rate));
    return out;
}

}  // namespace

double t_classical(unsigned m, unsigned n, double a_prime) {
    if (n < 1 || n > m) fail(ErrorCategory::invalid_configuration, "need 1 <= n <= m");
    if (!(a_prime > 0.0)) fail(ErrorCategory::invalid_configuration, "A' must be positive");
    return finite_or_inf(std::log(a_prime) + std::log(static_cast<double>(n)) + n * std::log(2.0) +
                         log_binomial(m, n));
}

double t_classical_lossy(unsigned m, unsigned n_detected, LossConfig loss, double a_prime) {
    const unsigned n_her = n_detected + loss.total();
    if (n_detected < 1 || n_her > m) fail(ErrorCategory::invalid_configuration, "need 1 <= n_detected and n + losses <= m");
    if (!(a_prime > 0.0)) fail(ErrorCategory::invalid_configuration, "A' must be positive");
    const unsigned n_prop = n_detected + loss.n_lost_out;
    return finite_or_inf(log_binomial(n_her, loss.n_lost_in) + std::log(a_prime) +
                         std::log(static_cast<double>(n_prop)) + n_prop * std::log(2.0) +
                         log_binomial(m, n_detected) +
                         log_binomial(m - n_detected, loss.n_lost_out));
}

double t_classical_lossy_mixed(unsigned m, unsigned n_detected, unsigned n_lost, double a_prime) {
    double total = 0.0;
    for (unsigned k = 0; k <= n_lost; ++k) total += t_classical_lossy(m, n_detected, LossConfig{k, n_lost - k}, a_prime);
    return total / (n_lost + 1);
}

double t_quantum_spdc(unsigned m, unsigned n, const SpdcParams& params, unsigned include_lossy_up_to) {
    double p = p_sbs(m, n, params);
    for (unsigned k = 1; k <= include_lossy_up_to && k < n; ++k) p += p_sbs_lossy(m, n, k, params);
    return inverse_rate(params.pump_rate, p);
}

double t_quantum_qd(unsigned n_array, unsigned i, const QdParams& params, Demux demux, bool include_one_lost) {
    double p = p_qd(n_array, i, params, demux);
    if (include_one_lost && i >= 2) p += p_qd_one_lost(n_array, i, params, demux);
    return inverse_rate(params.rep_rate, p);
}

double t_quantum_mw(unsigned m, unsigned n, const MwParams& params, unsigned include_lossy_up_to, bool include_dark) {
    if (m < 1 || n > m) fail(ErrorCategory::invalid_configuration, "need 1 <= m and n <= m");
    double p = p_mw_lossy(n, 0, params);
    for (unsigned k = 1; k <= include_lossy_up_to && k < n; ++k) {
        p += include_dark ? p_mw_lossy_dark(m, n, k, params) : p_mw_lossy(n, k, params);
    }
    return inverse_rate(1.0 / (m * params.t_step), p);
}

std::string_view platform_name(Platform platform) noexcept {
    switch (platform) {
        case Platform::spdc: return "spdc";
        case Platform::qd: return "qd";
        case Platform::mw: return "mw";
    }
    return "spdc";
}

Platform parse_platform(std::string_view text) {
    if (text == "spdc") return Platform::spdc;
    if (text == "qd") return Platform::qd;
    if (text == "mw") return Platform::mw;
    fail(ErrorCategory::parse_error, "unknown platform \"" + std::string(text) + "\"");
}

std::vector<unsigned> NPolicy::photon_numbers(unsigned m) const {
    std::vector<unsigned> out;
    switch (kind) {
        case Kind::fixed:
            if (n >= 1 && n <= m) out.push_back(n);
            break;
        case Kind::weighted_range:
            for (unsigned k = std::max(n_min, 1u); k * k < m; ++k) out.push_back(k);
            break;
        case Kind::largest_hard: {
            unsigned k = 0;
            while ((k + 1) * (k + 1) < m) ++k;
            if (k >= std::max(n_min, 1u)) out.push_back(k);
            break;
        }
    }
    return out;
}

std::string NPolicy::describe() const {
    switch (kind) {
        case Kind::fixed: return "n=" + std::to_string(n);
        case Kind::weighted_range: return std::to_string(n_min) + "<=n<sqrt(m)";
        case Kind::largest_hard: return "max n:n^2<m";
    }
    return "";
}

std::string event_class_label(const SupremacyPoint& point) {
    switch (point.event_class) {
        case EventClass::exact: return "exact";
        case EventClass::lossy: return "lossy(" + std::to_string(point.lost) + ")";
        case EventClass::generalized: return "generalized";
    }
    return "";
}

std::vector<SupremacyPoint> supremacy_sweep(const SweepConfig& config) {
    if (config.m_min < 1 || config.m_max < config.m_min) {
        fail(ErrorCategory::invalid_configuration, "empty mode range");
    }
    if (!(config.a_prime > 0.0)) fail(ErrorCategory::invalid_configuration, "A' must be positive");
    switch (config.platform) {
        case Platform::spdc: config.spdc.validate(); break;
        case Platform::qd: config.qd.validate(); break;
        case Platform::mw: config.mw.validate(); break;
    }

    const unsigned count = config.m_max - config.m_min + 1;
    std::vector<std::vector<SupremacyPoint>> per_m(count);
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
        try {
            per_m[k] = sweep_point(config, config.m_min + static_cast<unsigned>(k));
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<SupremacyPoint> out;
    for (auto& points : per_m) out.insert(out.end(), points.begin(), points.end());
    return out;
}

std::optional<unsigned> find_crossing(const std::vector<SupremacyPoint>& points, EventClass event_class,
                                      unsigned lost) {
    for (const auto& p : points) {
        if (p.event_class != event_class) continue;
        if (event_class == EventClass::lossy && p.lost != lost) continue;
        if (p.ratio >= 1.0) return p.m;
    }
    return std::nullopt;
}

std::string sweep_to_csv(const std::vector<SupremacyPoint>& points) {
    std::string out = "m,n_policy,event_class,t_c,t_q,ratio\n";
    char buffer[128];
    for (const auto& p : points) {
        std::snprintf(buffer, sizeof buffer, ",%.17g,%.17g,%.17g\n", p.t_c, p.t_q, p.ratio);
        out += std::to_string(p.m) + "," + p.n_policy + "," + event_class_label(p) + buffer;
    }
    return out;
}

}  // namespace lsbs
