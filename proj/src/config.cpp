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

#include "lsbs/config.hpp"

#include <cstdlib>
#include <set>

#include <json.hpp>
#include <omp.h>

#include "lsbs/error.hpp"

namespace lsbs {

namespace {

using nlohmann::json;

double unit_value(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc.at(key).is_number()) fail(ErrorCategory::parse_error, std::string("\"") + key + "\" must be a number");
    return doc.at(key).get<double>();
}

unsigned count_value(const json& doc, const char* key, unsigned fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc.at(key).is_number_unsigned()) {
        fail(ErrorCategory::parse_error, std::string("\"") + key + "\" must be a nonnegative integer");
    }
    return doc.at(key).get<unsigned>();
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed, const char* where) {
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.count(key)) fail(ErrorCategory::parse_error, "unknown key \"" + key + "\" in " + where);
    }
}

EfficiencySchedule parse_schedule(const json& doc) {
    if (doc.is_number()) return EfficiencySchedule::constant(doc.get<double>());
    if (!doc.is_object()) fail(ErrorCategory::parse_error, "eta_D_schedule must be a number or an object");
    reject_unknown(doc, {"kind", "a", "b", "m0", "span", "value"}, "eta_D_schedule");
    const std::string kind = doc.value("kind", "linear");
    if (kind == "constant") return EfficiencySchedule::constant(unit_value(doc, "value", unit_value(doc, "a", 0.6)));
    if (kind != "linear") fail(ErrorCategory::parse_error, "unknown schedule kind \"" + kind + "\"");
    return EfficiencySchedule::linear(unit_value(doc, "a", 0.6), unit_value(doc, "b", 0.25), unit_value(doc, "m0", 10),
                                      unit_value(doc, "span", 90));
}

NPolicy parse_policy(const json& doc) {
    if (!doc.is_object()) fail(ErrorCategory::parse_error, "n_policy must be an object");
    reject_unknown(doc, {"kind", "n", "n_min"}, "n_policy");
    NPolicy p;
    const std::string kind = doc.value("kind", "weighted_range");
    if (kind == "fixed") {
        p.kind = NPolicy::Kind::fixed;
    } else if (kind == "weighted_range") {
        p.kind = NPolicy::Kind::weighted_range;
    } else if (kind == "largest_hard") {
        p.kind = NPolicy::Kind::largest_hard;
    } else {
        fail(ErrorCategory::parse_error, "unknown n_policy kind \"" + kind + "\"");
    }
    p.n = count_value(doc, "n", p.n);
    p.n_min = count_value(doc, "n_min", p.n_min);
    return p;
}

std::string policy_kind(NPolicy::Kind kind) {
    switch (kind) {
        case NPolicy::Kind::fixed: return "fixed";
        case NPolicy::Kind::weighted_range: return "weighted_range";
        case NPolicy::Kind::largest_hard: return "largest_hard";
    }
    return "";
}

int g_threads = 0;

}  // namespace

SweepConfig default_sweep_config(Platform platform) {
    SweepConfig c;
    c.platform = platform;
    if (platform != Platform::spdc) c.n_policy.kind = NPolicy::Kind::largest_hard;
    return c;
}

SweepConfig sweep_config_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCategory::parse_error, std::string("config JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorCategory::parse_error, "config must be a JSON object");
    reject_unknown(doc,
                   {"platform", "g", "eta_T", "p_in", "eta_D", "eta_D_schedule", "pump_rate", "eta", "eta_dm",
                    "rep_rate", "demux", "p_dark", "t_step", "a_prime", "m_min", "m_max", "n_policy",
                    "include_lossy_up_to", "include_dark"},
                   "config");
    try {
        SweepConfig c = default_sweep_config(parse_platform(doc.value("platform", "spdc")));
        c.spdc.g = unit_value(doc, "g", c.spdc.g);
        c.spdc.eta_T = unit_value(doc, "eta_T", c.spdc.eta_T);
        c.spdc.pump_rate = unit_value(doc, "pump_rate", c.spdc.pump_rate);
        c.qd.eta = unit_value(doc, "eta", c.qd.eta);
        c.qd.eta_dm = unit_value(doc, "eta_dm", c.qd.eta_dm);
        c.qd.rep_rate = unit_value(doc, "rep_rate", c.qd.rep_rate);
        c.mw.p_dark = unit_value(doc, "p_dark", c.mw.p_dark);
        c.mw.t_step = unit_value(doc, "t_step", c.mw.t_step);
        if (doc.contains("p_in")) {
            const double p_in = unit_value(doc, "p_in", 0.0);
            c.spdc.p_in = c.qd.p_in = c.mw.p_in = p_in;
        }
        if (doc.contains("eta_D")) {
            const double eta_D = unit_value(doc, "eta_D", 0.0);
            c.eta_D_schedule = EfficiencySchedule::constant(eta_D);
            c.spdc.eta_D = c.qd.eta_D = c.mw.eta_D = eta_D;
        }
        if (doc.contains("eta_D_schedule")) c.eta_D_schedule = parse_schedule(doc.at("eta_D_schedule"));
        if (doc.contains("demux")) c.demux = parse_demux(doc.at("demux").get<std::string>());
        c.a_prime = unit_value(doc, "a_prime", c.a_prime);
        c.m_min = count_value(doc, "m_min", c.m_min);
        c.m_max = count_value(doc, "m_max", c.m_max);
        if (doc.contains("n_policy")) c.n_policy = parse_policy(doc.at("n_policy"));
        c.include_lossy_up_to = count_value(doc, "include_lossy_up_to", c.include_lossy_up_to);
        if (doc.contains("include_dark")) c.include_dark = doc.at("include_dark").get<bool>();
        return c;
    } catch (const json::exception& e) {
        fail(ErrorCategory::parse_error, std::string("config JSON: ") + e.what());
    }
}

std::string sweep_config_to_json(const SweepConfig& c) {
    json doc = {{"platform", platform_name(c.platform)}, {"m_min", c.m_min}, {"m_max", c.m_max},
                {"a_prime", c.a_prime}, {"include_lossy_up_to", c.include_lossy_up_to},
                {"n_policy", {{"kind", policy_kind(c.n_policy.kind)}, {"n", c.n_policy.n}, {"n_min", c.n_policy.n_min}}}};
    const auto& s = c.eta_D_schedule;
    const json schedule = s.kind == EfficiencySchedule::Kind::constant
                              ? json{{"kind", "constant"}, {"value", s.a}}
                              : json{{"kind", "linear"}, {"a", s.a}, {"b", s.b}, {"m0", s.m0}, {"span", s.span}};
    switch (c.platform) {
        case Platform::spdc:
            doc.update({{"g", c.spdc.g}, {"eta_T", c.spdc.eta_T}, {"p_in", c.spdc.p_in},
                        {"pump_rate", c.spdc.pump_rate}, {"eta_D_schedule", schedule}});
            break;
        case Platform::qd:
            doc.update({{"eta", c.qd.eta}, {"eta_dm", c.qd.eta_dm}, {"p_in", c.qd.p_in}, {"rep_rate", c.qd.rep_rate},
                        {"demux", demux_name(c.demux)}, {"eta_D_schedule", schedule}});
            break;
        case Platform::mw:
            doc.update({{"p_in", c.mw.p_in}, {"eta_D", c.mw.eta_D}, {"p_dark", c.mw.p_dark}, {"t_step", c.mw.t_step},
                        {"include_dark", c.include_dark}});
            break;
    }
    return doc.dump();
}

int default_thread_count() {
    if (const char* env = std::getenv("LSBS_THREADS")) {
        const int value = std::atoi(env);
        if (value >= 1) return value;
    }
    return omp_get_num_procs();
}

void set_thread_count(int threads) {
    g_threads = threads >= 1 ? threads : default_thread_count();
    omp_set_num_threads(g_threads);
}

int thread_count() { return g_threads >= 1 ? g_threads : default_thread_count(); }

}  // namespace lsbs
