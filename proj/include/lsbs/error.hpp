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

#ifndef LSBS_ERROR_HPP
#define LSBS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsbs {

/// Machine-readable failure classes. The CLI prints the category name
/// verbatim so scripts can branch on it.
enum class ErrorCategory {
    invalid_dimension,
    invalid_configuration,
    oracle_scale_exceeded,
    insufficient_data,
    instance_too_large,
    invalid_comparison,
    invalid_distribution,
    degenerate_hypothesis,
    parse_error,
    usage,
};

std::string_view category_name(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
 public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

 private:
    ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory category, const std::string& message) {
    throw Error(category, message);
}

}  // namespace lsbs

#endif  // LSBS_ERROR_HPP
