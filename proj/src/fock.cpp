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

#include "lsbs/fock.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "lsbs/combinatorics.hpp"
#include "lsbs/error.hpp"

namespace lsbs {

FockState::FockState(std::vector<unsigned> occupations) : occupations_(std::move(occupations)) {
    if (occupations_.empty()) fail(ErrorCategory::invalid_dimension, "Fock state needs at least one mode");
    if (occupations_.size() > std::numeric_limits<Mode>::max()) {
        fail(ErrorCategory::invalid_dimension, "too many modes");
    }
    photons_ = std::accumulate(occupations_.begin(), occupations_.end(), std::size_t{0});
}

FockState FockState::from_modes(std::size_t num_modes, std::span<const Mode> modes) {
    std::vector<unsigned> occ(num_modes, 0);
    for (Mode mode : modes) {
        if (mode >= num_modes) fail(ErrorCategory::invalid_configuration, "mode index out of range");
        ++occ[mode];
    }
    return FockState(std::move(occ));
}

FockState FockState::leading_ones(std::size_t num_modes, std::size_t photons) {
    if (photons > num_modes) fail(ErrorCategory::invalid_configuration, "more photons than modes");
    std::vector<unsigned> occ(num_modes, 0);
    std::fill_n(occ.begin(), photons, 1u);
    return FockState(std::move(occ));
}

FockState FockState::parse(std::string_view text) {
    std::vector<unsigned> occ;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(text.find(':', pos), text.size());
        unsigned value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || first == last) {
            fail(ErrorCategory::parse_error, "bad Fock state \"" + std::string(text) + "\"");
        }
        occ.push_back(value);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return FockState(std::move(occ));
}

bool FockState::collision_free() const noexcept {
    return std::all_of(occupations_.begin(), occupations_.end(), [](unsigned o) { return o <= 1; });
}

std::vector<Mode> FockState::mode_list() const {
    std::vector<Mode> modes;
    modes.reserve(photons_);
    for (std::size_t i = 0; i < occupations_.size(); ++i)
        for (unsigned k = 0; k < occupations_[i]; ++k) modes.push_back(static_cast<Mode>(i));
    return modes;
}

double FockState::factorial_product() const {
    double result = 1.0;
    for (unsigned o : occupations_)
        for (unsigned k = 2; k <= o; ++k) result *= k;
    return result;
}

std::string FockState::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < occupations_.size(); ++i) {
        if (i) out += ':';
        out += std::to_string(occupations_[i]);
    }
    return out;
}

std::string_view family_name(Family family) noexcept {
    return family == Family::collision_free ? "collision-free" : "full-fock";
}

Family parse_family(std::string_view text) {
    if (text == "collision-free" || text == "cf") return Family::collision_free;
    if (text == "full-fock" || text == "full") return Family::full_fock;
    fail(ErrorCategory::parse_error, "unknown family \"" + std::string(text) + "\"");
}

std::uint64_t family_size(std::size_t m, std::size_t n, Family family) noexcept {
    if (family == Family::collision_free) return binomial_u64(m, n);
    if (m == 0) return n == 0 ? 1 : 0;
    return binomial_u64(m + n - 1, n);
}

FockBasis::FockBasis(std::size_t m, std::size_t n, Family family, std::uint64_t cap)
    : m_(m), n_(n), family_(family), size_(0) {
    if (m == 0) fail(ErrorCategory::invalid_dimension, "basis needs at least one mode");
    if (m > std::numeric_limits<Mode>::max()) fail(ErrorCategory::invalid_dimension, "too many modes");
    const std::uint64_t count = family_size(m, n, family);
    if (count > cap) {
        fail(ErrorCategory::instance_too_large, std::to_string(count) + " states for m=" + std::to_string(m) +
                                                    ", n=" + std::to_string(n) + " exceed the cap of " +
                                                    std::to_string(cap));
    }
    if (count == 0) fail(ErrorCategory::invalid_configuration, "empty Fock family");
    size_ = static_cast<std::size_t>(count);

    completions_.assign((m_ + 1) * (n_ + 1), 0);
    for (std::size_t p = 0; p <= m_; ++p)
        for (std::size_t s = 0; s <= n_; ++s) {
            completions_[p * (n_ + 1) + s] = (p == 0) ? (s == 0 ? 1 : 0) : family_size(p, s, family_);
        }

    // Ascending lexicographic order of occupation vectors: walk modes left to
    // right, trying the smallest admissible occupation first.
    const unsigned cap_per_mode = family_ == Family::collision_free ? 1u : static_cast<unsigned>(n_);
    modes_.reserve(size_ * n_);
    std::vector<unsigned> occ(m_, 0);
    std::vector<Mode> current;
    current.reserve(n_);
    auto emit = [&] {
        current.clear();
        for (std::size_t i = 0; i < m_; ++i)
            for (unsigned k = 0; k < occ[i]; ++k) current.push_back(static_cast<Mode>(i));
        modes_.insert(modes_.end(), current.begin(), current.end());
    };
    auto recurse = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
        const std::size_t positions_left = m_ - pos - 1;
        if (pos == m_ - 1) {
            if (remaining <= cap_per_mode) {
                occ[pos] = static_cast<unsigned>(remaining);
                emit();
                occ[pos] = 0;
            }
            return;
        }
        const unsigned hi = static_cast<unsigned>(std::min<std::size_t>(remaining, cap_per_mode));
        for (unsigned v = 0; v <= hi; ++v) {
            if (remaining - v > positions_left * cap_per_mode) continue;
            occ[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        occ[pos] = 0;
    };
    recurse(recurse, 0, n_);
}

FockState FockBasis::state(std::size_t index) const {
    return FockState::from_modes(m_, modes(index));
}

std::uint64_t FockBasis::completions(std::size_t positions, std::size_t photons) const {
    return completions_[positions * (n_ + 1) + photons];
}

std::optional<std::size_t> FockBasis::index_of_modes(std::span<const Mode> sorted_modes) const {
    if (sorted_modes.size() != n_) return std::nullopt;
    if (!std::is_sorted(sorted_modes.begin(), sorted_modes.end())) return std::nullopt;
    if (n_ > 0 && sorted_modes.back() >= m_) return std::nullopt;
    std::uint64_t rank = 0;
    std::size_t remaining = n_;
    std::size_t cursor = 0;
    for (std::size_t pos = 0; pos < m_ && remaining > 0; ++pos) {
        unsigned occupation = 0;
        while (cursor < n_ && sorted_modes[cursor] == pos) {
            ++occupation;
            ++cursor;
        }
        if (family_ == Family::collision_free && occupation > 1) return std::nullopt;
        // States with a smaller occupation here and the same prefix come first.
        if (pos + 1 < m_) {
            for (unsigned v = 0; v < occupation; ++v) rank += completions(m_ - pos - 1, remaining - v);
        }
        remaining -= occupation;
    }
    return static_cast<std::size_t>(rank);
}

std::optional<std::size_t> FockBasis::index_of(const FockState& state) const {
    if (state.num_modes() != m_ || state.photons() != n_) return std::nullopt;
    const auto modes = state.mode_list();
    return index_of_modes(modes);
}

ComplexMatrix build_submatrix(const UnitaryMatrix& u, std::span<const Mode> input_modes,
                              std::span<const Mode> output_modes) {
    if (input_modes.size() != output_modes.size()) {
        fail(ErrorCategory::invalid_configuration, "input and output photon numbers differ");
    }
    const std::size_t n = input_modes.size();
    if (n == 0) fail(ErrorCategory::invalid_configuration, "submatrix needs at least one photon");
    std::vector<Complex> entries(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = u(output_modes[r], input_modes[c]);
    return ComplexMatrix(n, n, std::move(entries));
}

ComplexMatrix build_submatrix(const UnitaryMatrix& u, const FockState& input, const FockState& output) {
    if (input.num_modes() != u.dim() || output.num_modes() != u.dim()) {
        fail(ErrorCategory::invalid_configuration, "Fock state length differs from the unitary dimension");
    }
    if (input.photons() != output.photons()) {
        fail(ErrorCategory::invalid_configuration, "input and output photon numbers differ");
    }
    const auto in = input.mode_list();
    const auto out = output.mode_list();
    return build_submatrix(u, in, out);
}

}  // namespace lsbs
