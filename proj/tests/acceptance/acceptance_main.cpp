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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lsbs/config.hpp"
#include "lsbs/distribution.hpp"
#include "lsbs/haar.hpp"
#include "lsbs/permanent.hpp"
#include "lsbs/rng.hpp"
#include "lsbs/sources.hpp"
#include "lsbs/spdc_monte_carlo.hpp"
#include "lsbs/supremacy.hpp"
#include "lsbs/validation.hpp"

using namespace lsbs;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string format(const char* fmt, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, fmt, args...);
    return buffer;
}

bool within(double value, double lo, double hi) { return value >= lo && value <= hi; }

ComplexMatrix random_gaussian(std::size_t n, Rng& rng) {
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = Complex(rng.normal(), rng.normal());
    return a;
}

Outcome permanent_equivalence() {
    Rng rng(kSeed);
    double worst = 0.0;
    unsigned failures = 0;
    for (std::size_t n = 2; n <= 9; ++n) {
        for (int k = 0; k < 500; ++k) {
            const ComplexMatrix a = random_gaussian(n, rng);
            const Complex ref = permanent_naive(a);
            const double gap = std::abs(permanent_glynn(a) - ref);
            const bool ok = std::abs(ref) < 1e-3 ? gap <= 1e-12 : gap <= 1e-9 * std::abs(ref);
            if (!ok) ++failures;
            if (std::abs(ref) >= 1e-3) worst = std::max(worst, gap / std::abs(ref));
        }
    }
    return {failures == 0, format("4000 matrices, n=2..9, max relative gap %.2e (tol 1e-9), %u outside", worst, failures)};
}

Outcome glynn_scaling() {
    Rng rng(kSeed + 1);
    std::vector<std::pair<double, double>> points;
    std::string times;
    for (std::size_t n = 14; n <= 22; ++n) {
        const ComplexMatrix a = random_gaussian(n, rng);
        double best = 1e300;
        volatile double sink = 0.0;
        for (int rep = 0; rep < 5; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            sink = sink + permanent_glynn(a).real();
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        points.emplace_back(static_cast<double>(n), best);
        times += format(" %zu:%.3g", n, best);
    }
    const TimingModel fit = fit_timing_model(points);
    return {within(fit.exponent_scale, 0.95, 1.25),
            format("fitted A=%.3g B=%.4f (band [0.95, 1.25]); serial times s%s", fit.prefactor, fit.exponent_scale,
                   times.c_str())};
}

Outcome distribution_completeness() {
    double worst = 0.0;
    for (auto [n, m] : {std::pair{3u, 6u}, std::pair{4u, 7u}}) {
        for (std::uint64_t k = 0; k < 20; ++k) {
            const UnitaryMatrix u = haar_random_unitary(m, derive_seed(kSeed, k + 100 * m));
            const auto d = full_distribution(u, FockState::leading_ones(m, n), Family::full_fock,
                                             ParticleModel::indistinguishable, false);
            worst = std::max(worst, std::abs(d.raw_mass() - 1.0));
        }
    }
    return {worst <= 1e-9, format("max |raw mass - 1| = %.2e over 40 unitaries (tol 1e-9)", worst)};
}

Outcome hong_ou_mandel() {
    const UnitaryMatrix bs = UnitaryMatrix::balanced_beam_splitter();
    const FockState one_one = FockState::parse("1:1");
    const double bosons = bs_probability(bs, one_one, one_one);
    const double classical = distinguishable_probability(bs, one_one, one_one);
    return {std::abs(bosons) <= 1e-12 && std::abs(classical - 0.5) <= 1e-12,
            format("coincidence %.3e indistinguishable, %.15f distinguishable", bosons, classical)};
}

struct ValidationCase {
    unsigned n;
    LossConfig loss;
    double lo, hi;
};

Outcome validation_cases(const std::vector<ValidationCase>& cases) {
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        ValidationOptions options;
        options.m = 20;
        options.n_detected = c.n;
        options.loss = c.loss;
        options.ensemble = 50;
        options.trials = 500;
        options.confidence = 0.95;
        options.seed = kSeed;
        const auto r = min_samples_to_validate(options);
        const bool ok = within(r.min_samples_mean, c.lo, c.hi) && r.capped == 0;
        pass = pass && ok;
        detail += format("%sn=%u loss(%u,%u) %.2f+-%.2f in [%g, %g] %s", detail.empty() ? "" : "; ", c.n,
                         c.loss.n_lost_in, c.loss.n_lost_out, r.min_samples_mean, r.min_samples_std, c.lo, c.hi,
                         ok ? "ok" : "out");
    }
    return {pass, detail};
}

double mean_tvd(const FockState& b, LossConfig loss) {
    const unsigned m = 15;
    double total = 0.0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const UnitaryMatrix u = haar_random_unitary(m, derive_seed(kSeed, k));
        const auto ideal = lossy_distribution(u, FockState::leading_ones(m, 3), {}, ParticleModel::indistinguishable);
        const auto other = lossy_distribution(u, b, loss, ParticleModel::indistinguishable);
        total += total_variation_distance(ideal, other);
    }
    return total / 100.0;
}

FockState padded(const char* text) {
    const FockState s = FockState::parse(text);
    std::vector<unsigned> occ(s.occupations().begin(), s.occupations().end());
    occ.resize(15, 0);
    return FockState(occ);
}

Outcome tvd_table() {
    struct Row {
        const char* label;
        const char* input;
        LossConfig loss;
        double centre, half_width;
    };
    const Row rows[] = {
        {"2-1-0", "2:1:0", {}, 0.473, 0.108},
        {"2-1-1", "2:1:1", {0, 1}, 0.222, 0.032},
        {"1-0-1-1", "1:1:1:1", {1, 0}, 0.316, 0.052},
        {"1-1-1-1", "1:1:1:1", {0, 1}, 0.337, 0.058},
    };
    bool pass = true;
    std::string detail;
    for (const auto& row : rows) {
        const double v = mean_tvd(padded(row.input), row.loss);
        const bool ok = std::abs(v - row.centre) <= row.half_width;
        pass = pass && ok;
        detail += format("%s%s %.4f (%.3f+-%.3f)", detail.empty() ? "" : "; ", row.label, v, row.centre, row.half_width);
    }
    return {pass, detail};
}

Outcome source_oracles() {
    const SpdcParams params{0.02, 0.6, 0.7, 0.6, 76e6};
    const std::uint64_t trials = 10'000'000;
    const auto two = monte_carlo_spdc(10, 2, 1, params, trials, kSeed);
    const auto three = monte_carlo_spdc(10, 3, 1, params, trials, derive_seed(kSeed, 1));
    const double z_sbs = two.success.z_score(p_sbs(10, 2, params));
    const double z_fake = two.fake.z_score(p_sbs_fake(10, 2, params));
    const double z_lossy = three.lossy.z_score(p_sbs_lossy(10, 3, 1, params));
    return {z_sbs <= 3.0 && z_fake <= 3.0 && z_lossy <= 3.0,
            format("z p_sbs %.2f, p_sbs_fake %.2f, p_sbs_lossy %.2f (limit 3; 1e7 shots each)", z_sbs, z_fake,
                   z_lossy)};
}

Outcome supremacy_crossings() {
    SweepConfig spdc = default_sweep_config(Platform::spdc);
    spdc.m_min = 10;
    spdc.m_max = 150;
    SweepConfig mw = default_sweep_config(Platform::mw);
    mw.m_min = 10;
    mw.m_max = 150;
    const auto sp = supremacy_sweep(spdc);
    const auto mp = supremacy_sweep(mw);
    const auto spdc_gen = find_crossing(sp, EventClass::generalized);
    const auto mw_exact = find_crossing(mp, EventClass::exact);
    const auto mw_gen = find_crossing(mp, EventClass::generalized);
    auto show = [](std::optional<unsigned> v) { return v ? std::to_string(*v) : std::string("none"); };
    const bool pass = spdc_gen && within(*spdc_gen, 60, 100) && mw_exact && within(*mw_exact, 40, 60) && mw_gen &&
                      within(*mw_gen, 40, 60);
    return {pass, "spdc generalized m=" + show(spdc_gen) + " (band [60, 100]); mw exact m=" + show(mw_exact) +
                      ", generalized m=" + show(mw_gen) + " (band [40, 60]); A'=1.2e-14"};
}

Outcome identities() {
    double worst = 0.0;
    auto track = [&](double a, double b) {
        const double scale = std::max(std::abs(b), 1e-300);
        worst = std::max(worst, std::min(std::abs(a - b), std::abs(a - b) / scale));
    };
    MwParams mw;
    mw.p_dark = 0.0;
    for (unsigned m = 2; m <= 64; m += 3)
        for (unsigned n = 1; n <= std::min(m, 8u); ++n)
            for (unsigned l = 0; l <= n; ++l) track(p_mw_lossy_dark(m, n, l, mw), p_mw_lossy(n, l, mw));
    for (double g : {0.005, 0.02, 0.08}) {
        const SpdcParams sp{g, 0.6, 0.7, 0.6, 76e6};
        for (unsigned m = 4; m <= 100; m += 8)
            for (unsigned n = 1; n <= std::min(m, 8u); ++n) track(p_sbs_lossy(m, n, 0, sp), p_sbs(m, n, sp));
    }
    const QdParams qd;
    for (unsigned n_array = 2; n_array <= 12; ++n_array)
        for (unsigned i = 1; i <= n_array; ++i)
            track(p_qd(n_array, i, qd, Demux::active) / p_qd(n_array, i, qd, Demux::passive),
                  std::pow(qd.eta_dm * n_array, i));
    return {worst <= 1e-12, format("largest deviation %.2e across dark-count, lossy-SPDC and QD identities (tol 1e-12)", worst)};
}

Outcome determinism() {
    const std::vector<std::vector<std::string>> commands = {
        {"distribution", "--m", "10", "--n", "4", "--family", "full-fock", "--seed", "7"},
        {"distribution", "--m", "10", "--n", "4", "--loss-in", "1", "--loss-out", "1", "--format", "json", "--seed", "7"},
        {"sample", "--m", "12", "--n", "3", "--count", "2000", "--seed", "7"},
        {"tvd", "--m", "15", "--a", "1:1:1", "--b", "2:1:1", "--b-loss-out", "1", "--ensemble", "8", "--seed", "7"},
        {"validate", "--m", "15", "--n", "3", "--ensemble", "12", "--trials", "300", "--seed", "7"},
        {"sources", "--m", "10", "--n", "3", "--n-lost", "1", "--trials", "300000", "--seed", "7"},
        {"supremacy", "--m-min", "10", "--m-max", "100", "--seed", "7"},
        {"supremacy", "--platform", "mw", "--m-min", "10", "--m-max", "100", "--seed", "7"},
    };
    unsigned mismatches = 0, failures = 0, runs = 0;
    for (auto cmd : commands) {
        std::string reference;
        for (const char* threads : {"1", "2", "3", "8"}) {
            std::vector<std::string> args = cmd;
            args.insert(args.end(), {"--threads", threads});
            std::ostringstream out, err;
            ++runs;
            if (run_cli(args, out, err) != 0) {
                ++failures;
                continue;
            }
            if (reference.empty()) reference = out.str();
            if (out.str() != reference) ++mismatches;
        }
    }
    return {mismatches == 0 && failures == 0,
            format("%u CLI runs over threads {1,2,3,8}: %u mismatching artifacts, %u failed runs", runs, mismatches,
                   failures)};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "permanent oracle equivalence", 60, permanent_equivalence},
        {2, "Glynn scaling exponent", 600, glynn_scaling},
        {3, "full-Fock completeness", 60, distribution_completeness},
        {4, "Hong-Ou-Mandel dip", 60, hong_ou_mandel},
        {5, "lossless validation sample counts", 900,
         [] {
             return validation_cases({{3, {}, 16, 22}, {4, {}, 12, 16}, {5, {}, 10, 14}});
         }},
        {6, "input-loss validation sample counts", 1200,
         [] {
             return validation_cases({{3, {1, 0}, 44, 56}, {4, {1, 0}, 33, 41}});
         }},
        {7, "output-loss validation sample count", 1200, [] { return validation_cases({{3, {0, 1}, 87, 115}}); }},
        {8, "total variation distances, n=3 m=15", 600, tvd_table},
        {9, "source models against Monte Carlo", 600, source_oracles},
        {10, "supremacy crossings", 300, supremacy_crossings},
        {11, "closed-form identities", 60, identities},
        {12, "thread-count determinism", 600, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= c.limit_seconds;
        const bool pass = outcome.pass && in_time;
        if (!pass) ++failed;
        std::printf("%s criterion %d (%s): %s; %.1f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    outcome.detail.c_str(), seconds, c.limit_seconds, in_time ? "" : " over time");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
