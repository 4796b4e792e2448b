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

#ifndef LSBS_FOCK_HPP
#define LSBS_FOCK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsbs/matrix.hpp"

namespace lsbs {

using Mode = std::uint16_t;

/// Occupation-number vector over m modes.
class FockState {
 public:
    explicit FockState(std::vector<unsigned> occupations);

    /// State with one photon per entry of `modes` (repeats stack up).
    static FockState from_modes(std::size_t num_modes, std::span<const Mode> modes);
    /// First `photons` modes singly occupied.
    static FockState leading_ones(std::size_t num_modes, std::size_t photons);
    /// Colon-separated occupations, e.g. "1:0:2".
    static FockState parse(std::string_view text);

    std::size_t num_modes() const noexcept { return occupations_.size(); }
    std::size_t photons() const noexcept { return photons_; }
    bool collision_free() const noexcept;
    unsigned operator[](std::size_t mode) const { return occupations_[mode]; }
    std::span<const unsigned> occupations() const noexcept { return occupations_; }

    /// Occupied modes in ascending order, mode i listed occupations[i] times.
    std::vector<Mode> mode_list() const;
    /// prod_i occupations[i]!
    double factorial_product() const;

    std::string to_string() const;

    friend auto operator<=>(const FockState&, const FockState&) = default;
    friend bool operator==(const FockState&, const FockState&) = default;

 private:
    std::vector<unsigned> occupations_;
    std::size_t photons_ = 0;
};

enum class Family { collision_free, full_fock };

std::string_view family_name(Family family) noexcept;
Family parse_family(std::string_view text);

/// Number of n-photon states over m modes in the family (saturating).
std::uint64_t family_size(std::size_t m, std::size_t n, Family family) noexcept;

/// All n-photon states of one family in ascending lexicographic order of the
/// occupation vector, stored as flat ascending mode lists.
class FockBasis {
 public:
    FockBasis(std::size_t m, std::size_t n, Family family, std::uint64_t cap);

    std::size_t num_modes() const noexcept { return m_; }
    std::size_t photons() const noexcept { return n_; }
    Family family() const noexcept { return family_; }
    std::size_t size() const noexcept { return size_; }

    /// Ascending mode list of state `index` (length = photons()).
    std::span<const Mode> modes(std::size_t index) const {
        return {modes_.data() + index * n_, n_};
    }
    FockState state(std::size_t index) const;

    /// Lexicographic rank of an ascending mode list; nullopt when the list
    /// does not describe a member of this basis.
    std::optional<std::size_t> index_of_modes(std::span<const Mode> sorted_modes) const;
    std::optional<std::size_t> index_of(const FockState& state) const;

 private:
    std::uint64_t completions(std::size_t positions, std::size_t photons) const;

    std::size_t m_;
    std::size_t n_;
    Family family_;
    std::size_t size_;
    std::vector<Mode> modes_;
    // completions_[p * (n_ + 1) + s]: states over p modes holding s photons.
    std::vector<std::uint64_t> completions_;
};

/// n x n matrix whose column k is column in[k] of U and row k is row out[k],
/// mode lists ascending with repetition.
ComplexMatrix build_submatrix(const UnitaryMatrix& u, const FockState& input, const FockState& output);
ComplexMatrix build_submatrix(const UnitaryMatrix& u, std::span<const Mode> input_modes,
                              std::span<const Mode> output_modes);

}  // namespace lsbs

#endif  // LSBS_FOCK_HPP
