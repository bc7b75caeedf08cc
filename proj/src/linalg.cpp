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

#include "skewlcp/linalg.hpp"

namespace skewlcp {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shapes do not match");
    const ExtField& f = *field_;
    Matrix r(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem& a = at(i, k);
            if (f.is_zero(a)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(a, other.at(k, j)));
        }
    return r;
}

Matrix Matrix::stacked(const Matrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("matrix widths do not match");
    Matrix r(field_ ? field_ : other.field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return r;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix r(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(i, cols[j]);
    return r;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    const ExtField& f = *field_;
    Matrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && f.is_zero(m.at(p, c))) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
        const Elem inv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = f.mul(inv, m.at(r, j));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const Elem factor = m.at(i, c);
            if (f.is_zero(factor)) continue;
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    m.rows_ = r;
    m.data_.resize(r * cols_);
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t Matrix::rank() const { return rref().rows(); }

bool Matrix::is_zero() const {
    for (const auto& e : data_)
        if (!field_->is_zero(e)) return false;
    return true;
}

Matrix Matrix::nullspace() const {
    const ExtField& f = *field_;
    std::vector<std::size_t> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    Matrix out(field_, cols_ - piv.size(), cols_);
    std::size_t k = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        out.at(k, free) = f.one();
        for (std::size_t i = 0; i < piv.size(); ++i) out.at(k, piv[i]) = f.neg(r.at(i, free));
        ++k;
    }
    return out.rref();
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix row_space(const Matrix& m) { return m.rref(); }

Matrix subspace_sum(const Matrix& a, const Matrix& b) { return a.stacked(b).rref(); }

Matrix subspace_intersection(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("subspaces of different spaces");
    const FieldPtr& fp = a.field_ptr() ? a.field_ptr() : b.field_ptr();
    Matrix ra = a.rref(), rb = b.rref();
    const std::size_t n = a.cols();
    if (ra.rows() == 0 || rb.rows() == 0) return Matrix(fp, 0, n);
    const ExtField& f = *fp;
    // Columns are the basis vectors of both spaces; kernel vectors (x, y)
    // give x A = -y B.
    Matrix m(fp, n, ra.rows() + rb.rows());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < ra.rows(); ++i) m.at(k, i) = ra.at(i, k);
        for (std::size_t j = 0; j < rb.rows(); ++j) m.at(k, ra.rows() + j) = rb.at(j, k);
    }
    Matrix ker = m.nullspace();
    Matrix out(fp, ker.rows(), n);
    for (std::size_t r = 0; r < ker.rows(); ++r)
        for (std::size_t i = 0; i < ra.rows(); ++i) {
            const Elem& c = ker.at(r, i);
            if (f.is_zero(c)) continue;
            for (std::size_t k = 0; k < n; ++k) out.at(r, k) = f.add(out.at(r, k), f.mul(c, ra.at(i, k)));
        }
    return out.rref();
}

bool same_row_space(const Matrix& a, const Matrix& b) { return a.rref() == b.rref(); }

bool in_row_space(const Matrix& m, const std::vector<Elem>& v) {
    Matrix row = Matrix::from_rows(m.field_ptr(), {v}, m.cols());
    return m.stacked(row).rank() == m.rank();
}

}  // namespace skewlcp
