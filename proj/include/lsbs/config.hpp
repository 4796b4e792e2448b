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

#ifndef LSBS_CONFIG_HPP
#define LSBS_CONFIG_HPP

#include <string>

#include "lsbs/supremacy.hpp"

namespace lsbs {

/// Platform sweep configuration, e.g.
///   {"platform": "spdc", "g": 0.02, "eta_T": 0.6, "p_in": 0.7,
///    "eta_D_schedule": {"kind": "linear", "a": 0.6, "b": 0.25, "m0": 10, "span": 90}}
/// Missing keys keep their defaults; unknown keys are rejected. Without an
/// "n_policy" entry, spdc uses 3 <= n < sqrt(m) and qd / mw the largest n
/// with n^2 < m.
SweepConfig sweep_config_from_json(const std::string& text);
SweepConfig default_sweep_config(Platform platform);
std::string sweep_config_to_json(const SweepConfig& config);

/// Worker threads used by every parallel kernel. LSBS_THREADS overrides the
/// hardware default; values < 1 select the default.
int default_thread_count();
void set_thread_count(int threads);
int thread_count();

}  // namespace lsbs

#endif  // LSBS_CONFIG_HPP
