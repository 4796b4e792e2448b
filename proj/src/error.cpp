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

#include "lsbs/error.hpp"

namespace lsbs {

std::string_view category_name(ErrorCategory category) noexcept {
    switch (category) {
        case ErrorCategory::invalid_dimension: return "invalid-dimension";
        case ErrorCategory::invalid_configuration: return "invalid-configuration";
        case ErrorCategory::oracle_scale_exceeded: return "oracle-scale-exceeded";
        case ErrorCategory::insufficient_data: return "insufficient-data";
        case ErrorCategory::instance_too_large: return "instance-too-large";
        case ErrorCategory::invalid_comparison: return "invalid-comparison";
        case ErrorCategory::invalid_distribution: return "invalid-distribution";
        case ErrorCategory::degenerate_hypothesis: return "degenerate-hypothesis";
        case ErrorCategory::parse_error: return "parse-error";
        case ErrorCategory::usage: return "usage";
    }
    return "unknown";
}

}  // namespace lsbs
