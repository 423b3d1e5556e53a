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

#pragma once

#include <vector>

#include "lueroth/scalar.hpp"

namespace lueroth {

/// Dense matrix over an exact field.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    ExactMatrix transposed() const;
    ExactMatrix mul(const ExactMatrix& o) const;
    std::vector<Scalar> mul_vec(const std::vector<Scalar>& v) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Scalar det(const ExactMatrix& m);

struct RrefResult {
    ExactMatrix mat;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

/// Reduced row echelon form over the coefficient field.
RrefResult rref(const ExactMatrix& m);

size_t rank_of(const ExactMatrix& m);

/// Canonical basis of the right kernel: the rows of the returned list are in
/// reduced echelon form, so equal subspaces yield identical bases.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

/// Pfaffian by expansion along the first row. The input must be skew-symmetric
/// of even dimension; both are checked entry by entry.
Scalar pfaffian(const ExactMatrix& m);

}  // namespace lueroth
