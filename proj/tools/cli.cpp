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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsbs/config.hpp"
#include "lsbs/distribution.hpp"
#include "lsbs/error.hpp"
#include "lsbs/haar.hpp"
#include "lsbs/permanent.hpp"
#include "lsbs/rng.hpp"
#include "lsbs/sources.hpp"
#include "lsbs/spdc_monte_carlo.hpp"
#include "lsbs/supremacy.hpp"
#include "lsbs/validation.hpp"

namespace lsbs {

namespace {

struct Common {
    std::optional<std::uint64_t> seed;
    int threads = 0;
    std::string out;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--seed", common.seed, "Root seed (drawn from entropy and recorded when omitted)");
    cmd->add_option("--threads", common.threads, "Worker threads (default: all cores or LSBS_THREADS)");
    cmd->add_option("--out", common.out, "Write the artifact to this file instead of stdout");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCategory::usage, "cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fmt(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

// Command echo without the flags that may differ between equivalent runs.
std::string command_echo(const std::vector<std::string>& args) {
    std::string out = "lsbs";
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--threads" || a == "--out") {
            ++i;
            continue;
        }
        if (a.rfind("--threads=", 0) == 0 || a.rfind("--out=", 0) == 0) continue;
        out += " " + a;
    }
    return out;
}

class Session {
 public:
    Session(const Common& common, const std::vector<std::string>& args, std::ostream& out)
        : common_(common), args_(args), out_(out) {
        if (common.seed) {
            seed_ = *common.seed;
        } else {
            std::random_device device;
            seed_ = (static_cast<std::uint64_t>(device()) << 32) ^ device();
        }
        set_thread_count(common.threads);
    }

    std::uint64_t seed() const { return seed_; }

    std::string header(const std::string& config_json = "") const {
        std::string h = "# lsbs " LSBS_VERSION "\n# command: " + command_echo(args_) + "\n# seed: " +
                        std::to_string(seed_) + "\n";
        if (!config_json.empty()) h += "# config: " + config_json + "\n";
        return h;
    }

    void emit(const std::string& text) const {
        if (common_.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(common_.out, std::ios::binary);
        if (!file) fail(ErrorCategory::usage, "cannot write " + common_.out);
        file << text;
    }

 private:
    const Common& common_;
    const std::vector<std::string>& args_;
    std::ostream& out_;
    std::uint64_t seed_ = 0;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(ErrorCategory::usage, "cannot write " + path);
    file << text;
}

// --- permanent -------------------------------------------------------------

struct PermanentArgs {
    std::string file;
    std::string method = "glynn";
    std::size_t partitions = 0;
};

void run_permanent(const PermanentArgs& a, const Session& session) {
    const ComplexMatrix matrix = matrix_from_json(read_file(a.file));
    Complex value;
    if (a.method == "naive") {
        value = permanent_naive(matrix);
    } else if (a.method == "glynn") {
        value = a.partitions > 0 ? permanent_glynn_parallel(matrix, a.partitions) : permanent_glynn(matrix);
    } else {
        fail(ErrorCategory::usage, "unknown method \"" + a.method + "\"");
    }
    char buffer[80];
    std::snprintf(buffer, sizeof buffer, "%.15g %.15g\n", value.real(), value.imag());
    session.emit(buffer);
}

// --- distribution / sample -------------------------------------------------

struct DistArgs {
    std::string matrix;
    unsigned m = 0;
    std::optional<std::uint64_t> unitary_seed;
    std::string input;
    unsigned n = 0;
    std::string family = "collision-free";
    std::string model = "indistinguishable";
    unsigned loss_in = 0;
    unsigned loss_out = 0;
    bool combined = false;
    bool raw = false;
    std::string format = "csv";
    std::uint64_t max_entries = DistributionOptions{}.max_entries;
    std::size_t count = 1000;
};

void add_dist_options(CLI::App* cmd, DistArgs& a) {
    cmd->add_option("--matrix", a.matrix, "Unitary as matrix JSON");
    cmd->add_option("--m", a.m, "Mode count for a Haar-random unitary");
    cmd->add_option("--unitary-seed", a.unitary_seed, "Seed of the Haar unitary (default: derived from --seed)");
    cmd->add_option("--input", a.input, "Heralded input state, e.g. 1:1:0:0");
    cmd->add_option("--n", a.n, "Heralded photons in the first modes");
    cmd->add_option("--family", a.family, "collision-free | full-fock");
    cmd->add_option("--model", a.model, "indistinguishable | distinguishable");
    cmd->add_option("--loss-in", a.loss_in, "Photons lost before the interferometer");
    cmd->add_option("--loss-out", a.loss_out, "Photons lost before detection");
    cmd->add_flag("--combined", a.combined, "Mix every input/output split of the total loss");
    cmd->add_flag("--raw", a.raw, "Keep the raw (unrenormalized) lossless distribution");
    cmd->add_option("--max-entries", a.max_entries, "Enumeration cap");
}

UnitaryMatrix resolve_unitary(const std::string& matrix_file, unsigned m, std::optional<std::uint64_t> unitary_seed,
                              const Session& session) {
    if (!matrix_file.empty()) {
        if (m != 0) fail(ErrorCategory::usage, "--matrix and --m are exclusive");
        return UnitaryMatrix(matrix_from_json(read_file(matrix_file)));
    }
    if (m == 0) fail(ErrorCategory::usage, "give --matrix or --m");
    return haar_random_unitary(m, unitary_seed.value_or(derive_seed(session.seed(), 0)));
}

FockState resolve_input(const std::string& input, unsigned n, std::size_t m) {
    if (!input.empty()) {
        if (n != 0) fail(ErrorCategory::usage, "--input and --n are exclusive");
        return FockState::parse(input);
    }
    if (n == 0) fail(ErrorCategory::usage, "give --input or --n");
    if (n > m) fail(ErrorCategory::invalid_configuration, "more photons than modes");
    return FockState::leading_ones(m, n);
}

OutputDistribution build_distribution(const UnitaryMatrix& u, const FockState& input, Family family,
                                      ParticleModel model, LossConfig loss, bool combined, bool renormalize,
                                      const DistributionOptions& options) {
    if (loss.total() == 0) {
        if (combined) fail(ErrorCategory::usage, "--combined needs at least one lost photon");
        return full_distribution(u, input, family, model, renormalize, options);
    }
    if (family != Family::collision_free) {
        fail(ErrorCategory::usage, "lossy distributions are over the collision-free family");
    }
    if (!renormalize) fail(ErrorCategory::usage, "lossy distributions are always renormalized");
    if (combined) return combined_loss_distribution(u, input, loss.total(), model, {}, options);
    return lossy_distribution(u, input, loss, model, options);
}

OutputDistribution distribution_from_args(const DistArgs& a, const Session& session) {
    const UnitaryMatrix u = resolve_unitary(a.matrix, a.m, a.unitary_seed, session);
    const FockState input = resolve_input(a.input, a.n, u.dim());
    return build_distribution(u, input, parse_family(a.family), parse_model(a.model), LossConfig{a.loss_in, a.loss_out},
                              a.combined, !a.raw, DistributionOptions{a.max_entries});
}

void run_distribution(const DistArgs& a, const Session& session) {
    const auto dist = distribution_from_args(a, session);
    if (a.format == "csv") {
        session.emit(session.header() + distribution_to_csv(dist));
    } else if (a.format == "json") {
        auto doc = nlohmann::json::parse(distribution_to_json(dist));
        doc["metadata"] = {{"version", LSBS_VERSION}, {"seed", session.seed()}};
        session.emit(doc.dump() + "\n");
    } else {
        fail(ErrorCategory::usage, "unknown format \"" + a.format + "\"");
    }
}

void run_sample(const DistArgs& a, const Session& session) {
    const auto dist = distribution_from_args(a, session);
    const auto events = sample_events(dist, derive_seed(session.seed(), 1), a.count);
    std::string text = session.header() + "event,state\n";
    for (std::size_t i = 0; i < events.size(); ++i) text += std::to_string(i) + "," + events[i].to_string() + "\n";
    session.emit(text);
}

// --- tvd -------------------------------------------------------------------

struct TvdArgs {
    std::string matrix;
    unsigned m = 0;
    unsigned ensemble = 1;
    std::string a;
    std::string b;
    unsigned a_loss_in = 0, a_loss_out = 0, b_loss_in = 0, b_loss_out = 0;
    std::string family = "collision-free";
    std::string detail;
};

FockState padded_state(const std::string& text, std::size_t m) {
    const FockState s = FockState::parse(text);
    if (s.num_modes() > m) fail(ErrorCategory::invalid_configuration, "state " + text + " is longer than m");
    std::vector<unsigned> occ(s.occupations().begin(), s.occupations().end());
    occ.resize(m, 0);
    return FockState(occ);
}

void run_tvd(const TvdArgs& a, const Session& session) {
    if (a.ensemble < 1) fail(ErrorCategory::usage, "--ensemble must be >= 1");
    if (!a.matrix.empty() && a.ensemble != 1) fail(ErrorCategory::usage, "--matrix allows a single unitary only");
    const Family family = parse_family(a.family);
    std::vector<double> values(a.ensemble);
    std::vector<std::uint64_t> seeds(a.ensemble);
    std::size_t modes = 0;
    for (unsigned k = 0; k < a.ensemble; ++k) {
        seeds[k] = derive_seed(session.seed(), k);
        const UnitaryMatrix u = resolve_unitary(a.matrix, a.m, seeds[k], session);
        modes = u.dim();
        const auto pa = build_distribution(u, padded_state(a.a, u.dim()), family, ParticleModel::indistinguishable,
                                           LossConfig{a.a_loss_in, a.a_loss_out}, false, true, {});
        const auto pb = build_distribution(u, padded_state(a.b, u.dim()), family, ParticleModel::indistinguishable,
                                           LossConfig{a.b_loss_in, a.b_loss_out}, false, true, {});
        values[k] = total_variation_distance(pa, pb);
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= a.ensemble;
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    const double std_dev = a.ensemble > 1 ? std::sqrt(sq / (a.ensemble - 1)) : 0.0;

    session.emit(session.header() + "a,b,m,family,ensemble,tvd_mean,tvd_std\n" + a.a + "," + a.b + "," +
                 std::to_string(modes) + "," +
                 std::string(family_name(family)) + "," + std::to_string(a.ensemble) + "," + fmt(mean) + "," +
                 fmt(std_dev) + "\n");
    if (!a.detail.empty()) {
        std::string text = session.header() + "unitary,unitary_seed,tvd\n";
        for (unsigned k = 0; k < a.ensemble; ++k)
            text += std::to_string(k) + "," + std::to_string(seeds[k]) + "," + fmt(values[k]) + "\n";
        write_file(a.detail, text);
    }
}

// --- validate --------------------------------------------------------------

struct ValidateArgs {
    ValidationOptions options;
    unsigned loss_in = 0;
    unsigned loss_out = 0;
    std::string detail;
};

void run_validate(ValidateArgs a, const Session& session) {
    a.options.loss = LossConfig{a.loss_in, a.loss_out};
    a.options.seed = session.seed();
    const auto r = min_samples_to_validate(a.options);
    std::string text = session.header() +
                       "m,n_detected,loss_in,loss_out,combined,ensemble,trials,confidence,min_samples_mean,"
                       "min_samples_std,capped\n";
    text += std::to_string(r.m) + "," + std::to_string(r.n_detected) + "," + std::to_string(r.loss.n_lost_in) + "," +
            std::to_string(r.loss.n_lost_out) + "," + (r.combine_splits ? "1" : "0") + "," +
            std::to_string(r.unitaries_used) + "," + std::to_string(r.trials_per_unitary) + "," + fmt(r.confidence) +
            "," + fmt(r.min_samples_mean) + "," + fmt(r.min_samples_std) + "," + std::to_string(r.capped) + "\n";
    session.emit(text);
    if (!a.detail.empty()) {
        std::string detail = session.header() + "unitary,unitary_seed,min_samples,capped,kl_divergence\n";
        for (std::size_t k = 0; k < r.per_unitary.size(); ++k) {
            const auto& v = r.per_unitary[k];
            detail += std::to_string(k) + "," + std::to_string(v.unitary_seed) + "," + std::to_string(v.min_samples) +
                      "," + (v.capped ? "1" : "0") + "," + fmt(v.kl_divergence) + "\n";
        }
        write_file(a.detail, detail);
    }
}

// --- sources / supremacy ---------------------------------------------------

struct PlatformArgs {
    std::string platform;
    std::string config;
};

SweepConfig resolve_config(const PlatformArgs& a) {
    if (a.config.empty()) return default_sweep_config(parse_platform(a.platform.empty() ? "spdc" : a.platform));
    SweepConfig c = sweep_config_from_json(read_file(a.config));
    if (!a.platform.empty() && parse_platform(a.platform) != c.platform) {
        fail(ErrorCategory::usage, "--platform disagrees with the config file");
    }
    return c;
}

struct SourcesArgs {
    PlatformArgs platform;
    unsigned m = 10;
    unsigned n = 2;
    unsigned n_lost = 0;
    std::uint64_t trials = 0;
};

void run_sources(const SourcesArgs& a, const Session& session) {
    const SweepConfig c = resolve_config(a.platform);
    std::string text = session.header(sweep_config_to_json(c)) + "quantity,m,n,n_lost,analytic,monte_carlo,standard_error,z_score\n";
    auto row = [&](const std::string& name, double analytic, const Estimate* mc) {
        text += name + "," + std::to_string(a.m) + "," + std::to_string(a.n) + "," + std::to_string(a.n_lost) + "," +
                fmt(analytic);
        if (mc) {
            text += "," + fmt(mc->probability) + "," + fmt(mc->standard_error) + "," + fmt(mc->z_score(analytic)) + "\n";
        } else {
            text += ",,,\n";
        }
    };
    switch (c.platform) {
        case Platform::spdc: {
            const SpdcParams params = c.spdc.with_eta_D(c.eta_D_schedule.at(a.m));
            const double success = p_sbs(a.m, a.n, params);
            const double fake = p_sbs_fake(a.m, a.n, params);
            std::optional<SpdcMonteCarloResult> mc;
            if (a.trials > 0) mc = monte_carlo_spdc(a.m, a.n, a.n_lost, params, a.trials, session.seed());
            row("p_sbs", success, mc ? &mc->success : nullptr);
            row("p_sbs_fake", fake, mc ? &mc->fake : nullptr);
            if (a.n_lost > 0) row("p_sbs_lossy", p_sbs_lossy(a.m, a.n, a.n_lost, params), mc ? &mc->lossy : nullptr);
            row("p_sbs/p_sbs_fake", fake > 0.0 ? success / fake : INFINITY, nullptr);
            break;
        }
        case Platform::qd: {
            const QdParams params = c.qd.with_eta_D(c.eta_D_schedule.at(a.m));
            row("p_qd_passive", p_qd(a.n, a.n, params, Demux::passive), nullptr);
            row("p_qd_active", p_qd(a.n, a.n, params, Demux::active), nullptr);
            if (a.n >= 2) {
                row("p_qd_one_lost_passive", p_qd_one_lost(a.n, a.n, params, Demux::passive), nullptr);
                row("p_qd_one_lost_active", p_qd_one_lost(a.n, a.n, params, Demux::active), nullptr);
            }
            break;
        }
        case Platform::mw: {
            row("p_mw_in", p_mw_in(a.n, a.n_lost, c.mw.p_in), nullptr);
            row("p_mw_lossy", p_mw_lossy(a.n, a.n_lost, c.mw), nullptr);
            row("p_mw_lossy_dark", p_mw_lossy_dark(a.m, a.n, a.n_lost, c.mw), nullptr);
            break;
        }
    }
    session.emit(text);
}

struct SupremacyArgs {
    PlatformArgs platform;
    std::optional<unsigned> m_min;
    std::optional<unsigned> m_max;
    std::optional<double> a_prime;
    std::optional<unsigned> lossy_up_to;
};

void run_supremacy(const SupremacyArgs& a, const Session& session) {
    SweepConfig c = resolve_config(a.platform);
    if (a.m_min) c.m_min = *a.m_min;
    if (a.m_max) c.m_max = *a.m_max;
    if (a.a_prime) c.a_prime = *a.a_prime;
    if (a.lossy_up_to) c.include_lossy_up_to = *a.lossy_up_to;
    const auto points = supremacy_sweep(c);
    std::string text = session.header(sweep_config_to_json(c));
    for (EventClass cls : {EventClass::exact, EventClass::generalized}) {
        const auto crossing = find_crossing(points, cls);
        text += std::string("# crossing ") + (cls == EventClass::exact ? "exact" : "generalized") + ": " +
                (crossing ? std::to_string(*crossing) : std::string("none")) + "\n";
    }
    session.emit(text + sweep_to_csv(points));
}

int exit_code_for(ErrorCategory category) {
    return category == ErrorCategory::usage || category == ErrorCategory::parse_error ? 2 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lossy scattershot boson sampling toolkit", "lsbs"};
    app.set_version_flag("--version", std::string("lsbs ") + LSBS_VERSION);
    app.require_subcommand(1);

    Common common;

    PermanentArgs perm;
    auto* perm_cmd = app.add_subcommand("permanent", "Permanent of a matrix JSON file");
    perm_cmd->add_option("file", perm.file, "Matrix JSON")->required();
    perm_cmd->add_option("--method", perm.method, "glynn | naive");
    perm_cmd->add_option("--partitions", perm.partitions, "Parallel Gray-code partitions (0 = serial)");

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("distribution", "Output distribution of a heralded input");
    add_dist_options(dist_cmd, dist);
    dist_cmd->add_option("--format", dist.format, "csv | json");

    DistArgs samp;
    auto* samp_cmd = app.add_subcommand("sample", "Draw events from an output distribution");
    add_dist_options(samp_cmd, samp);
    samp_cmd->add_option("--count", samp.count, "Number of events");

    TvdArgs tvd;
    auto* tvd_cmd = app.add_subcommand("tvd", "Total variation distance between two inputs");
    tvd_cmd->add_option("--matrix", tvd.matrix, "Unitary as matrix JSON");
    tvd_cmd->add_option("--m", tvd.m, "Mode count for Haar-random unitaries");
    tvd_cmd->add_option("--ensemble", tvd.ensemble, "Number of Haar unitaries");
    tvd_cmd->add_option("--a", tvd.a, "Reference input, e.g. 1:1:1")->required();
    tvd_cmd->add_option("--b", tvd.b, "Compared input, e.g. 2:1:1")->required();
    tvd_cmd->add_option("--a-loss-in", tvd.a_loss_in);
    tvd_cmd->add_option("--a-loss-out", tvd.a_loss_out);
    tvd_cmd->add_option("--b-loss-in", tvd.b_loss_in);
    tvd_cmd->add_option("--b-loss-out", tvd.b_loss_out);
    tvd_cmd->add_option("--family", tvd.family, "collision-free | full-fock");
    tvd_cmd->add_option("--detail", tvd.detail, "Per-unitary CSV file");

    ValidateArgs val;
    auto* val_cmd = app.add_subcommand("validate", "Minimum samples to validate against distinguishable photons");
    val_cmd->add_option("--m", val.options.m);
    val_cmd->add_option("--n", val.options.n_detected, "Detected photons");
    val_cmd->add_option("--loss-in", val.loss_in);
    val_cmd->add_option("--loss-out", val.loss_out);
    val_cmd->add_flag("--combined", val.options.combine_splits, "Mix every input/output split of the losses");
    val_cmd->add_option("--split-weights", val.options.split_weights, "Weights of 0..n_lost input losses");
    val_cmd->add_option("--ensemble", val.options.ensemble);
    val_cmd->add_option("--trials", val.options.trials);
    val_cmd->add_option("--confidence", val.options.confidence);
    val_cmd->add_option("--max-samples", val.options.max_samples);
    val_cmd->add_option("--detail", val.detail, "Per-unitary CSV file");

    SourcesArgs src;
    auto* src_cmd = app.add_subcommand("sources", "Source-model probabilities, optionally against Monte Carlo");
    src_cmd->add_option("--platform", src.platform.platform, "spdc | qd | mw");
    src_cmd->add_option("--config", src.platform.config, "Platform JSON config");
    src_cmd->add_option("--m", src.m);
    src_cmd->add_option("--n", src.n);
    src_cmd->add_option("--n-lost", src.n_lost);
    src_cmd->add_option("--trials", src.trials, "Monte Carlo shots (spdc; 0 = analytic only)");

    SupremacyArgs sup;
    auto* sup_cmd = app.add_subcommand("supremacy", "t_c / t_q sweep over the mode count");
    sup_cmd->add_option("--platform", sup.platform.platform, "spdc | qd | mw");
    sup_cmd->add_option("--config", sup.platform.config, "Platform JSON config");
    sup_cmd->add_option("--m-min", sup.m_min);
    sup_cmd->add_option("--m-max", sup.m_max);
    sup_cmd->add_option("--a-prime", sup.a_prime, "Classical seconds per permanent step");
    sup_cmd->add_option("--lossy-up-to", sup.lossy_up_to, "Lost photons folded into the lossy classes");

    for (auto* cmd : {perm_cmd, dist_cmd, samp_cmd, tvd_cmd, val_cmd, src_cmd, sup_cmd}) add_common(cmd, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << "lsbs " << LSBS_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        const Session session(common, args, out);
        if (*perm_cmd) run_permanent(perm, session);
        if (*dist_cmd) run_distribution(dist, session);
        if (*samp_cmd) run_sample(samp, session);
        if (*tvd_cmd) run_tvd(tvd, session);
        if (*val_cmd) run_validate(val, session);
        if (*src_cmd) run_sources(src, session);
        if (*sup_cmd) run_supremacy(sup, session);
    } catch (const Error& e) {
        err << "error: " << category_name(e.category()) << ": " << e.what() << "\n";
        return exit_code_for(e.category());
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace lsbs
