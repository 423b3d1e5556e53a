/*
 * Copyright 2026 The lueroth-kit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lueroth/linalg.hpp"

#include <stdexcept>
#include <string>

namespace lueroth {

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    }
    return t;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    ExactMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < o.cols_; ++j) {
            Scalar s(0);
            for (size_t k = 0; k < cols_; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    }
    return r;
}

std::vector<Scalar> ExactMatrix::mul_vec(const std::vector<Scalar>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<Scalar> r(rows_, Scalar(0));
    for (size_t i = 0; i < rows_; ++i) {
        Scalar s(0);
        for (size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in matrix sum");
    ExactMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Scalar det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return Scalar(1);
    ExactMatrix a = m;
    Scalar prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a.at(piv, k).is_zero()) ++piv;
            if (piv == n) return Scalar(0);
            for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = Scalar(0);
        }
        prev = a.at(k, k);
    }
    Scalar d = a.at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

RrefResult rref(const ExactMatrix& m) {
    RrefResult r;
    r.mat = m;
    ExactMatrix& a = r.mat;
    size_t rows = a.rows(), cols = a.cols();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && a.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != row) {
            for (size_t j = 0; j < cols; ++j) std::swap(a.at(row, j), a.at(piv, j));
        }
        Scalar inv = a.at(row, col).inverse();
        for (size_t j = col; j < cols; ++j) a.at(row, j) = a.at(row, j) * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (size_t j = col; j < cols; ++j) a.at(i, j) = a.at(i, j) - f * a.at(row, j);
        }
        r.pivot_cols.push_back(col);
        ++row;
    }
    r.rank = row;
    return r;
}

size_t rank_of(const ExactMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = Scalar(1);
        for (size_t p = 0; p < r.pivot_cols.size(); ++p) {
            v[r.pivot_cols[p]] = -r.mat.at(p, f);
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;

    // Canonicalize: reduced echelon form of the basis rows.
    ExactMatrix b(basis.size(), cols);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < cols; ++j) b.at(i, j) = basis[i][j];
    }
    RrefResult rb = rref(b);
    std::vector<std::vector<Scalar>> out;
    for (size_t i = 0; i < rb.rank; ++i) {
        std::vector<Scalar> v(cols);
        for (size_t j = 0; j < cols; ++j) v[j] = rb.mat.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {
Scalar pfaffian_rec(const ExactMatrix& a, std::vector<size_t>& idx) {
    size_t n = idx.size();
    if (n == 0) return Scalar(1);
    Scalar total(0);
    size_t i0 = idx[0];
    int sign = 1;
    for (size_t j = 1; j < n; ++j) {
        const Scalar& aij = a.at(i0, idx[j]);
        if (!aij.is_zero()) {
            std::vector<size_t> rest;
            rest.reserve(n - 2);
            for (size_t k = 1; k < n; ++k) {
                if (k != j) rest.push_back(idx[k]);
            }
            Scalar sub = pfaffian_rec(a, rest);
            total += (sign > 0 ? aij : -aij) * sub;
        }
        sign = -sign;
    }
    return total;
}
}  // namespace

Scalar pfaffian(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian of non-square matrix");
    size_t n = m.rows();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian needs even dimension, got " + std::to_string(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            if (m.at(i, j) != -m.at(j, i)) {
                throw std::invalid_argument("matrix not skew-symmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
        }
    }
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    return pfaffian_rec(m, idx);
}

}  // namespace lueroth
