/*
   Copyright 2026 The skewlcp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWLCP_LINALG_HPP
#define SKEWLCP_LINALG_HPP

#include <cstddef>
#include <vector>

#include "galois.hpp"

namespace skewlcp {

/// Dense matrix over an ExtField, row-major.
class Matrix {
   public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldPtr field, std::size_t n);
    /// Rows given as element vectors of equal length.
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols);

    const ExtField& field() const { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::vector<Elem> row(std::size_t i) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    /// Rows of *this followed by rows of other.
    Matrix stacked(const Matrix& other) const;
    /// Only the listed columns, in the given order.
    Matrix select_columns(const std::vector<std::size_t>& cols) const;

    /// Reduced row echelon form with zero rows dropped; pivoting picks the
    /// first nonzero entry, so the result is canonical for the row space.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    bool is_zero() const;
    /// Basis of {v : M v^T = 0} as the rows of the result (in rref).
    Matrix nullspace() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

   private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

/// Row-space arithmetic; every result is returned in rref.
Matrix row_space(const Matrix& m);
Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersection(const Matrix& a, const Matrix& b);
bool same_row_space(const Matrix& a, const Matrix& b);
/// True when v lies in the row space of m.
bool in_row_space(const Matrix& m, const std::vector<Elem>& v);

}  // namespace skewlcp

#endif
