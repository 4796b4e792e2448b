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

#include "lsbs/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "lsbs/error.hpp"

namespace lsbs {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        fail(ErrorCategory::invalid_dimension, "matrix needs at least one row and one column");
    }
    if (entries_.size() != rows_ * cols_) {
        fail(ErrorCategory::invalid_dimension, "entry count does not match rows * cols");
    }
    if (!all_finite()) fail(ErrorCategory::invalid_configuration, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix result(n, n);
    for (std::size_t i = 0; i < n; ++i) result(i, i) = 1.0;
    return result;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix result(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) result(c, r) = (*this)(r, c);
    return result;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) result(c, r) = std::conj((*this)(r, c));
    return result;
}

ComplexMatrix ComplexMatrix::squared_moduli() const {
    std::vector<Complex> out(entries_.size());
    std::transform(entries_.begin(), entries_.end(), out.begin(), [](Complex z) { return Complex(std::norm(z)); });
    return ComplexMatrix(rows_, cols_, std::move(out));
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCategory::invalid_dimension, "matrix product shape mismatch");
    ComplexMatrix result(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols_; ++j) result(i, j) += aik * b(k, j);
        }
    return result;
}

double unitarity_defect(const ComplexMatrix& a) {
    if (!a.is_square()) fail(ErrorCategory::invalid_dimension, "unitarity needs a square matrix");
    const std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) dot += a(i, k) * std::conj(a(j, k));
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    return worst;
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix matrix, double tolerance) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) fail(ErrorCategory::invalid_dimension, "unitary must be square");
    const double defect = unitarity_defect(matrix_);
    if (!(defect <= tolerance)) {
        fail(ErrorCategory::invalid_configuration,
             "matrix is not unitary (max |UU^dagger - I| = " + std::to_string(defect) + ")");
    }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t m) { return UnitaryMatrix(ComplexMatrix::identity(m)); }

UnitaryMatrix UnitaryMatrix::balanced_beam_splitter() {
    const double h = std::numbers::sqrt2 / 2.0;
    return UnitaryMatrix(ComplexMatrix(2, 2, {h, h, h, -h}));
}

std::string matrix_to_json(const ComplexMatrix& a) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            re_row.push_back(a(r, c).real());
            im_row.push_back(a(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    nlohmann::json doc = {{"m", a.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
    return doc.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCategory::parse_error, std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("re") || !doc["re"].is_array()) {
        fail(ErrorCategory::parse_error, "matrix JSON needs an \"re\" array of rows");
    }
    const auto& re = doc["re"];
    const std::size_t rows = re.size();
    if (rows == 0 || !re[0].is_array()) fail(ErrorCategory::parse_error, "matrix JSON has no rows");
    const std::size_t cols = re[0].size();
    const bool has_im = doc.contains("im");
    if (has_im && (!doc["im"].is_array() || doc["im"].size() != rows)) {
        fail(ErrorCategory::parse_error, "\"im\" must match the shape of \"re\"");
    }
    if (doc.contains("m") && (!doc["m"].is_number_unsigned() || doc["m"].get<std::size_t>() != rows)) {
        fail(ErrorCategory::parse_error, "\"m\" must equal the number of rows");
    }
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    try {
        for (std::size_t r = 0; r < rows; ++r) {
            if (!re[r].is_array() || re[r].size() != cols) fail(ErrorCategory::parse_error, "ragged \"re\" rows");
            if (has_im && (!doc["im"][r].is_array() || doc["im"][r].size() != cols)) {
                fail(ErrorCategory::parse_error, "ragged \"im\" rows");
            }
            for (std::size_t c = 0; c < cols; ++c) {
                const double x = re[r][c].get<double>();
                const double y = has_im ? doc["im"][r][c].get<double>() : 0.0;
                entries.emplace_back(x, y);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCategory::parse_error, std::string("matrix JSON: ") + e.what());
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

}  // namespace lsbs
