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

#ifndef LSBS_SUPREMACY_HPP
#define LSBS_SUPREMACY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsbs/distribution.hpp"
#include "lsbs/sources.hpp"

namespace lsbs {

/// Per-permanent-step cost of the reference supercomputer, seconds.
inline constexpr double kDefaultAPrime = 1.2e-14;

// Times below use +infinity as the overflow / zero-rate sentinel.

/// A' n 2^n C(m, n)
double t_classical(unsigned m, unsigned n, double a_prime = kDefaultAPrime);

/// Brute-force cost of one lossy event with n_detected photons detected and
/// the given split: C(n_her, l_in) input subsets, each propagating
/// n_detected + l_out photons over the C(m, n_detected) detected patterns
/// times the C(m - n_detected, l_out) collision-free completions of each.
double t_classical_lossy(unsigned m, unsigned n_detected, LossConfig loss, double a_prime = kDefaultAPrime);

/// Uniform average of t_classical_lossy over the splits of n_lost photons.
double t_classical_lossy_mixed(unsigned m, unsigned n_detected, unsigned n_lost,
                               double a_prime = kDefaultAPrime);

/// 1 / (pump_rate (p_sbs + sum_{k=1..K} p_sbs_lossy(k))), K clamped to n - 1.
double t_quantum_spdc(unsigned m, unsigned n, const SpdcParams& params, unsigned include_lossy_up_to);

/// 1 / (rep_rate p_qd), adding the one-photon-lost events when requested.
double t_quantum_qd(unsigned n_array, unsigned i, const QdParams& params, Demux demux, bool include_one_lost);

/// m t_step / (p_mw_lossy(n, 0) + sum_{k=1..K} lossy terms); the lossy terms
/// use the dark-count form when include_dark is set.
double t_quantum_mw(unsigned m, unsigned n, const MwParams& params, unsigned include_lossy_up_to,
                    bool include_dark);

enum class Platform { spdc, qd, mw };
std::string_view platform_name(Platform platform) noexcept;
Platform parse_platform(std::string_view text);

/// Which photon numbers contribute at a given m.
struct NPolicy {
    enum class Kind {
        fixed,           ///< exactly `n`
        weighted_range,  ///< every n_min <= n < sqrt(m), probability weighted
        largest_hard,    ///< the largest n with n^2 < m (and n >= n_min)
    };
    Kind kind = Kind::weighted_range;
    unsigned n = 3;
    unsigned n_min = 3;

    std::vector<unsigned> photon_numbers(unsigned m) const;
    std::string describe() const;
};

enum class EventClass { exact, lossy, generalized };

struct SupremacyPoint {
    unsigned m = 0;
    std::string n_policy;
    EventClass event_class = EventClass::exact;
    unsigned lost = 0;
    double t_c = 0.0;
    double t_q = 0.0;
    double ratio = 0.0;
};

std::string event_class_label(const SupremacyPoint& point);

struct SweepConfig {
    Platform platform = Platform::spdc;
    unsigned m_min = 10;
    unsigned m_max = 120;
    NPolicy n_policy;
    double a_prime = kDefaultAPrime;
    /// Lost photons folded into the lossy / generalized classes.
    unsigned include_lossy_up_to = 1;

    SpdcParams spdc;
    QdParams qd;
    MwParams mw;
    EfficiencySchedule eta_D_schedule = EfficiencySchedule::optical_default();
    Demux demux = Demux::active;
    bool include_dark = true;
};

/// Points for every m in [m_min, m_max] and every event class, ordered by m
/// then class (exact, lossy(k)..., generalized). Per class, t_c is the
/// probability-weighted mean brute-force time of the contributing events and
/// t_q the mean waiting time for any one of them.
std::vector<SupremacyPoint> supremacy_sweep(const SweepConfig& config);

/// First m whose ratio for `event_class` reaches 1 (lossy points are
/// matched on `lost`).
std::optional<unsigned> find_crossing(const std::vector<SupremacyPoint>& points, EventClass event_class,
                                      unsigned lost = 1);

std::string sweep_to_csv(const std::vector<SupremacyPoint>& points);

}  // namespace lsbs

#endif  // LSBS_SUPREMACY_HPP
