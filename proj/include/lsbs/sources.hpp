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

#ifndef LSBS_SOURCES_HPP
#define LSBS_SOURCES_HPP

#include <cstdint>
#include <string_view>

namespace lsbs {

/// Efficiency as a function of the mode count. Linear schedules follow
/// a - b * (m - m0) / span, clamped to [0, 1].
struct EfficiencySchedule {
    enum class Kind { constant, linear };

    Kind kind = Kind::constant;
    double a = 1.0;
    double b = 0.0;
    double m0 = 0.0;
    double span = 1.0;

    static EfficiencySchedule constant(double value);
    static EfficiencySchedule linear(double a, double b, double m0, double span);
    /// 0.6 - 0.25 (m - 10) / 90, the optical detection schedule.
    static EfficiencySchedule optical_default();

    double at(double m) const;
};

/// Scattershot SPDC platform. eta_D is the value at the current mode count;
/// sweeps resolve it from a schedule with `with_eta_D`.
struct SpdcParams {
    double g = 0.02;
    double eta_T = 0.6;
    double p_in = 0.7;
    double eta_D = 0.6;
    double pump_rate = 76e6;

    /// 1 - (1 - eta_T)^2, click probability for a trigger arm holding two photons.
    double eta_T2() const noexcept;
    SpdcParams with_eta_D(double value) const;
    /// Throws invalid_configuration unless every invariant holds.
    void validate() const;
};

struct QdParams {
    double eta = 0.35;
    double eta_dm = 0.7;
    double p_in = 0.7;
    double eta_D = 0.6;
    double rep_rate = 76e6;

    QdParams with_eta_D(double value) const;
    void validate() const;
};

struct MwParams {
    double p_in = 0.9;
    double eta_D = 0.7;
    double p_dark = 0.1;
    double t_step = 0.3e-6;

    void validate() const;
};

enum class Demux { passive, active };

std::string_view demux_name(Demux demux) noexcept;
Demux parse_demux(std::string_view text);

// --- SPDC -------------------------------------------------------------------

/// tanh^(2s)(chi) / cosh^2(chi)
double spdc_number_prob(double chi, unsigned s);
/// Single-pair probability for squeezing chi: tanh^2(chi) / cosh^2(chi).
double g_from_squeezing(double chi);
/// Inverse of g_from_squeezing on chi >= 0 (branch tanh^2 chi <= 1/2); g <= 1/4.
double squeezing_from_g(double g);

/// m sources emitting s single and t double pairs:
/// g^s g^(2t) (1 - g - g^2)^(m-s-t) m! / ((m-s-t)! s! t!)
double p_gen2(unsigned m, unsigned s, unsigned t, double g);

/// Successful n-photon scattershot run: n triggers click, every heralded mode
/// receives exactly one photon, all n are detected.
double p_sbs(unsigned m, unsigned n, const SpdcParams& params);

/// Triple sum over (x, w, z) for injecting a fake state when n1 of the n
/// triggered modes hold single pairs and the rest double pairs.
double p_fake_in(unsigned n, unsigned n1, double p_in);

/// Fake term for s single and t double pairs, trigger and detection factors
/// included as in the closed form (output factor evaluated at 2n - n1 photons).
double p_trig_det_fake(unsigned n, unsigned s, unsigned t, const SpdcParams& params, unsigned m);

/// Sum of p_trig_det_fake over q in [n, m], t in [1, q].
double p_sbs_fake(unsigned m, unsigned n, const SpdcParams& params);

/// n triggers, n_lost photons missing at the output count, input state a
/// subset of the heralded singles; sums over input-lost photons i, their
/// single-pair share j, q, t and n1.
double p_sbs_lossy(unsigned m, unsigned n, unsigned n_lost, const SpdcParams& params);

// --- Quantum dots -----------------------------------------------------------

/// i photons through an n_array demultiplexer: passive eta^i n_array^-i
/// p_in^i eta_D^i, active eta^i eta_dm^i p_in^i eta_D^i.
double p_qd(unsigned n_array, unsigned i, const QdParams& params, Demux demux);

/// i photons emitted, exactly one of them lost at the input or the output.
double p_qd_one_lost(unsigned n_array, unsigned i, const QdParams& params, Demux demux);

// --- Microwave photons ------------------------------------------------------

/// p_in^(n-l) (1 - p_in)^l C(n, l)
double p_mw_in(unsigned n, unsigned n_lost_in, double p_in);

/// n_lost photons missing overall, split between creation and detection.
double p_mw_lossy(unsigned n, unsigned n_lost, const MwParams& params);

/// p_mw_lossy with dark clicks in vacuum modes filling in for lost photons.
double p_mw_lossy_dark(unsigned m, unsigned n, unsigned n_lost, const MwParams& params);

}  // namespace lsbs

#endif  // LSBS_SOURCES_HPP
