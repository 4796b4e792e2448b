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

#ifndef LSBS_MATRIX_HPP
#define LSBS_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lsbs {

using Complex = std::complex<double>;

/// Dense row-major complex matrix with at least one row and one column.
class ComplexMatrix {
 public:
    /// Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of `entries` (row-major, rows*cols long, all finite).
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::span<const Complex> entries() const noexcept { return entries_; }

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;
    /// Elementwise |a_ij|^2 as a complex matrix with zero imaginary parts.
    ComplexMatrix squared_moduli() const;

    bool all_finite() const noexcept;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

 private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// max_ij |(A A^dagger - I)_ij| for a square matrix.
double unitarity_defect(const ComplexMatrix& a);

/// Square matrix certified unitary to `tolerance` at construction.
class UnitaryMatrix {
 public:
    static constexpr double default_tolerance = 1e-12;

    explicit UnitaryMatrix(ComplexMatrix matrix, double tolerance = default_tolerance);

    static UnitaryMatrix identity(std::size_t m);
    /// 50:50 beam splitter [[1, 1], [1, -1]] / sqrt(2).
    static UnitaryMatrix balanced_beam_splitter();

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
    ComplexMatrix matrix_;
};

/// {"m": rows, "re": [[...]], "im": [[...]]}; "im" may be omitted on input.
std::string matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const std::string& text);

}  // namespace lsbs

#endif  // LSBS_MATRIX_HPP
