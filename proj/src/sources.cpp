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

#include "lsbs/sources.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lsbs/combinatorics.hpp"
#include "lsbs/error.hpp"

namespace lsbs {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// exponent * log(base), with 0 * log(0) = 0.
double log_pow(double base, std::int64_t exponent) {
    if (exponent == 0) return 0.0;
    return base > 0.0 ? static_cast<double>(exponent) * std::log(base) : kNegInf;
}

void check_unit(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        fail(ErrorCategory::invalid_configuration, std::string(name) + " must lie in [0, 1]");
    }
}

void check_photons(unsigned m, unsigned n) {
    if (n < 1 || n > m) fail(ErrorCategory::invalid_configuration, "need 1 <= n <= m");
}

double trigger_factor(unsigned n, unsigned n1, unsigned q, unsigned t, double eta_T, double eta_T2) {
    // n1 single-pair modes and n - n1 double-pair modes click, the others do not.
    const unsigned s = q - t;
    return ipow(eta_T, n1) * ipow(eta_T2, n - n1) * ipow(1.0 - eta_T, s - n1) * binomial(s, n1) *
           ipow(1.0 - eta_T2, t - n + n1) * binomial(t, n - n1);
}

}  // namespace

EfficiencySchedule EfficiencySchedule::constant(double value) {
    EfficiencySchedule s;
    s.kind = Kind::constant;
    s.a = value;
    return s;
}

EfficiencySchedule EfficiencySchedule::linear(double a, double b, double m0, double span) {
    if (!(span > 0.0)) fail(ErrorCategory::invalid_configuration, "schedule span must be positive");
    EfficiencySchedule s;
    s.kind = Kind::linear;
    s.a = a;
    s.b = b;
    s.m0 = m0;
    s.span = span;
    return s;
}

EfficiencySchedule EfficiencySchedule::optical_default() { return linear(0.6, 0.25, 10.0, 90.0); }

double EfficiencySchedule::at(double m) const {
    const double value = kind == Kind::constant ? a : a - b * (m - m0) / span;
    return std::clamp(value, 0.0, 1.0);
}

double SpdcParams::eta_T2() const noexcept { return 1.0 - (1.0 - eta_T) * (1.0 - eta_T); }

SpdcParams SpdcParams::with_eta_D(double value) const {
    SpdcParams copy = *this;
    copy.eta_D = value;
    return copy;
}

void SpdcParams::validate() const {
    check_unit(g, "g");
    check_unit(eta_T, "eta_T");
    check_unit(p_in, "p_in");
    check_unit(eta_D, "eta_D");
    if (g + g * g > 1.0) fail(ErrorCategory::invalid_configuration, "g + g^2 must not exceed 1");
    if (!(pump_rate > 0.0) || !std::isfinite(pump_rate)) {
        fail(ErrorCategory::invalid_configuration, "pump_rate must be positive");
    }
}

QdParams QdParams::with_eta_D(double value) const {
    QdParams copy = *this;
    copy.eta_D = value;
    return copy;
}

void QdParams::validate() const {
    check_unit(eta, "eta");
    check_unit(eta_dm, "eta_dm");
    check_unit(p_in, "p_in");
    check_unit(eta_D, "eta_D");
    if (!(rep_rate > 0.0) || !std::isfinite(rep_rate)) {
        fail(ErrorCategory::invalid_configuration, "rep_rate must be positive");
    }
}

void MwParams::validate() const {
    check_unit(p_in, "p_in");
    check_unit(eta_D, "eta_D");
    check_unit(p_dark, "p_dark");
    if (!(t_step > 0.0) || !std::isfinite(t_step)) {
        fail(ErrorCategory::invalid_configuration, "t_step must be positive");
    }
}

std::string_view demux_name(Demux demux) noexcept { return demux == Demux::passive ? "passive" : "active"; }

Demux parse_demux(std::string_view text) {
    if (text == "passive") return Demux::passive;
    if (text == "active") return Demux::active;
    fail(ErrorCategory::parse_error, "unknown demultiplexing \"" + std::string(text) + "\"");
}

double spdc_number_prob(double chi, unsigned s) {
    if (!(chi >= 0.0) || !std::isfinite(chi)) fail(ErrorCategory::invalid_configuration, "chi must be >= 0");
    const double c = std::cosh(chi);
    return ipow(std::tanh(chi), 2 * static_cast<std::int64_t>(s)) / (c * c);
}

double g_from_squeezing(double chi) { return spdc_number_prob(chi, 1); }

double squeezing_from_g(double g) {
    if (!(g >= 0.0 && g <= 0.25)) fail(ErrorCategory::invalid_configuration, "g must lie in [0, 1/4]");
    // g = x (1 - x) with x = tanh^2 chi on the branch x <= 1/2.
    const double x = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 4.0 * g)));
    return std::atanh(std::sqrt(x));
}

double p_gen2(unsigned m, unsigned s, unsigned t, double g) {
    if (s + t > m) fail(ErrorCategory::invalid_configuration, "s + t exceeds the number of sources");
    const double log_mult = log_binomial(m, s + t) + log_binomial(s + t, s);
    const double log_p = log_pow(g, s) + log_pow(g, 2 * static_cast<std::int64_t>(t)) +
                         log_pow(1.0 - g - g * g, m - s - t) + log_mult;
    return std::exp(log_p);
}

double p_sbs(unsigned m, unsigned n, const SpdcParams& params) {
    check_photons(m, n);
    params.validate();
    const double eta_T2 = params.eta_T2();
    const double pin = params.p_in;
    double total = 0.0;
    for (unsigned q = n; q <= m; ++q) {
        for (unsigned t = 0; t <= q; ++t) {
            const double gen = p_gen2(m, q - t, t, params.g);
            if (gen == 0.0) continue;
            const unsigned lo = n > t ? n - t : 0;
            const unsigned hi = std::min(q - t, n);
            for (unsigned n1 = lo; n1 <= hi; ++n1) {
                total += gen * ipow(pin * params.eta_T, n1) * ipow(2.0 * pin * (1.0 - pin) * eta_T2, n - n1) *
                         ipow(1.0 - params.eta_T, q - t - n1) * binomial(q - t, n1) *
                         ipow(1.0 - eta_T2, t - n + n1) * binomial(t, n - n1);
            }
        }
    }
    return ipow(params.eta_D, n) * total;
}

double p_fake_in(unsigned n, unsigned n1, double p_in) {
    if (n1 >= n) fail(ErrorCategory::invalid_configuration, "a fake input needs n1 < n");
    check_unit(p_in, "p_in");
    const unsigned pairs = n - n1;
    double total = 0.0;
    for (unsigned x = 1; x <= pairs; ++x) {
        const unsigned w_lo = n >= 2 * x ? n - 2 * x : 0;
        for (unsigned w = w_lo; w <= n - x; ++w) {
            for (unsigned z = 0; z <= std::min(n1, w); ++z) {
                const double shape = multinomial3(pairs, x, w - z);
                if (shape == 0.0) continue;
                total += ipow(2.0, w - z) * ipow(p_in, w + 2 * x) * ipow(1.0 - p_in, 2 * n - n1 - 2 * x - w) *
                         binomial(n1, z) * shape;
            }
        }
    }
    return total;
}

double p_trig_det_fake(unsigned n, unsigned s, unsigned t, const SpdcParams& params, unsigned m) {
    const double gen = p_gen2(m, s, t, params.g);
    if (gen == 0.0) return 0.0;
    const double eta_T2 = params.eta_T2();
    const unsigned lo = n > t ? n - t : 0;
    const unsigned hi = std::min(s, n);
    double total = 0.0;
    for (unsigned n1 = lo; n1 <= hi; ++n1) {
        if (n1 >= n) continue;
        total += p_fake_in(n, n1, params.p_in) * trigger_factor(n, n1, s + t, t, params.eta_T, eta_T2) *
                 ipow(params.eta_D, n) * ipow(1.0 - params.eta_D, n - n1) * binomial(2 * n - n1, n);
    }
    return gen * total;
}

double p_sbs_fake(unsigned m, unsigned n, const SpdcParams& params) {
    check_photons(m, n);
    params.validate();
    double total = 0.0;
    for (unsigned q = n; q <= m; ++q)
        for (unsigned t = 1; t <= q; ++t) total += p_trig_det_fake(n, q - t, t, params, m);
    return total;
}

double p_sbs_lossy(unsigned m, unsigned n, unsigned n_lost, const SpdcParams& params) {
    check_photons(m, n);
    if (n_lost >= n) fail(ErrorCategory::invalid_configuration, "n_lost must be smaller than n");
    params.validate();
    const double eta_T2 = params.eta_T2();
    const double pin = params.p_in;
    const double eta_D = params.eta_D;
    double total = 0.0;
    for (unsigned i = 0; i <= n_lost; ++i) {
        const double outer = ipow(eta_D, n - n_lost) * ipow(1.0 - eta_D, n_lost - i) * binomial(n - i, n_lost - i);
        if (outer == 0.0) continue;
        double inner = 0.0;
        for (unsigned q = n; q <= m; ++q) {
            for (unsigned t = 0; t <= q; ++t) {
                const double gen = p_gen2(m, q - t, t, params.g);
                if (gen == 0.0) continue;
                const unsigned lo = n > t ? n - t : 0;
                const unsigned hi = std::min(q - t, n);
                for (unsigned j = 0; j <= i; ++j) {
                    for (unsigned n1 = lo; n1 <= hi; ++n1) {
                        const double split = binomial(n1, j) * binomial(n - n1, i - j);
                        if (split == 0.0) continue;
                        inner += gen * ipow(2.0, static_cast<std::int64_t>(n - n1) - (i - j)) * ipow(pin, n - i) *
                                 ipow(1.0 - pin, n + i - n1) * ipow(params.eta_T, n1) * ipow(eta_T2, n - n1) *
                                 ipow(1.0 - params.eta_T, static_cast<std::int64_t>(q + t + n1) - 2 * n) *
                                 split * binomial(q - t, n1) * binomial(t, n - n1);
                    }
                }
            }
        }
        total += outer * inner;
    }
    return total;
}

double p_qd(unsigned n_array, unsigned i, const QdParams& params, Demux demux) {
    if (i < 1 || i > n_array) fail(ErrorCategory::invalid_configuration, "need 1 <= i <= n_array");
    params.validate();
    const double routing = demux == Demux::passive ? 1.0 / n_array : params.eta_dm;
    return ipow(params.eta, i) * ipow(routing, i) * ipow(params.p_in, i) * ipow(params.eta_D, i);
}

double p_qd_one_lost(unsigned n_array, unsigned i, const QdParams& params, Demux demux) {
    if (i < 2 || i > n_array) fail(ErrorCategory::invalid_configuration, "need 2 <= i <= n_array");
    params.validate();
    const double routing = demux == Demux::passive ? 1.0 / n_array : params.eta_dm;
    const double e = params.eta * routing * params.p_in * params.eta_D;
    return i * ipow(e, i - 1) * (1.0 - e);
}

double p_mw_in(unsigned n, unsigned n_lost_in, double p_in) {
    if (n_lost_in > n) fail(ErrorCategory::invalid_configuration, "n_lost_in exceeds n");
    check_unit(p_in, "p_in");
    return ipow(p_in, n - n_lost_in) * ipow(1.0 - p_in, n_lost_in) * binomial(n, n_lost_in);
}

double p_mw_lossy(unsigned n, unsigned n_lost, const MwParams& params) {
    if (n_lost > n) fail(ErrorCategory::invalid_configuration, "n_lost exceeds n");
    params.validate();
    double total = 0.0;
    for (unsigned l = 0; l <= n_lost; ++l) {
        total += ipow(params.eta_D, n - n_lost) * ipow(1.0 - params.eta_D, n_lost - l) *
                 binomial(n - l, n_lost - l) * p_mw_in(n, l, params.p_in);
    }
    return total;
}

double p_mw_lossy_dark(unsigned m, unsigned n, unsigned n_lost, const MwParams& params) {
    if (n_lost > n || n > m) fail(ErrorCategory::invalid_configuration, "need n_lost <= n <= m");
    params.validate();
    const double pd = params.p_dark;
    double total = 0.0;
    for (unsigned l = 0; l <= n_lost; ++l) {
        const unsigned vacuum = m - n + l;
        for (unsigned j = 0; j <= n - n_lost; ++j) {
            total += ipow(params.eta_D, n - n_lost - j) * ipow(1.0 - params.eta_D, n_lost + j - l) *
                     binomial(n - l, n_lost - l) * binomial(n - n_lost, j) * ipow(pd, j) * ipow(1.0 - pd, vacuum) *
                     binomial(vacuum + j, j) * p_mw_in(n, l, params.p_in);
        }
    }
    return total;
}

}  // namespace lsbs
