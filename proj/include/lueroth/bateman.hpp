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

#include <optional>
#include <utility>

#include "lueroth/poly.hpp"

namespace lueroth {

/// 2x3 matrix with a row of linear forms over a row of quadratic forms in x.
struct SyzygyMatrix {
    std::array<Poly, 3> lin;
    std::array<Poly, 3> quad;
};

/// Rows of partial derivatives of a conic Q and a cubic C in x.
SyzygyMatrix syzygy_from_QC(const Poly& Q, const Poly& C);

/// Column operation A with (l1,l2,l3)*A = (x1,x2,x3), applied to both rows.
/// Throws when the linear row is dependent.
std::pair<SyzygyMatrix, Mat3> normal_form(const SyzygyMatrix& m);

/// Element of the 18-dimensional tensor space of (quadratic in x) x (linear
/// in e): coordinates d(i,jk) = coefficient of x_j x_k e_i, j <= k.
/// A tuple is "projected" when its trace part has been removed, i.e. the
/// divergence of its quadratic row vanishes.
class BatemanTuple {
  public:
    BatemanTuple() = default;

    static BatemanTuple from_rows(const std::array<Poly, 3>& quad_rows, bool projected = false);

    /// Coordinate at e-slot i and unordered x-pair {j,k} (all 0-based).
    const Scalar& d(int i, int j, int k) const;
    Scalar& d(int i, int j, int k);

    /// The quadratic forms q_i with tensor sum q_i (x) e_i.
    std::array<Poly, 3> rows() const;

    bool projected() const { return projected_; }
    void mark_projected(bool p) { projected_ = p; }

    const std::optional<std::pair<Poly, Poly>>& provenance() const { return provenance_; }
    void set_provenance(Poly Q, Poly C) { provenance_ = std::make_pair(std::move(Q), std::move(C)); }

    BatemanTuple operator+(const BatemanTuple& o) const;
    BatemanTuple operator*(const Scalar& c) const;
    bool operator==(const BatemanTuple& o) const { return c_ == o.c_; }
    bool is_zero() const;

  private:
    std::array<std::array<Scalar, 6>, 3> c_{};  // [e-slot][pair index]
    bool projected_ = false;
    std::optional<std::pair<Poly, Poly>> provenance_;
};

/// Removes the trace summand from the quadratic row of a matrix in normal
/// form: q_i <- q_i - (1/4) x_i * sum_j dq_j/dx_j. The result has exactly
/// vanishing divergence; embedded trace rows q_i = x_i * l map to zero.
BatemanTuple v12_project(const SyzygyMatrix& normal);

/// Projection at the tuple level (same formula, idempotent).
BatemanTuple project_tuple(const BatemanTuple& t);

/// Divergence sum_i dq_i/dx_i of the tuple's quadratic row (a linear form).
Poly tuple_divergence(const BatemanTuple& t);

/// The bilinear pairing of a dual conic and a cubic: the projected tuple of
/// sum_i dQ*/de_i (x) dC/dx_i. Carries (Q*, C) as provenance.
BatemanTuple b_pairing(const Poly& Qstar_in_e, const Poly& C_in_x);

/// Decomposes sum_i dQ*/de_i (x) dQ/dx_i into a multiple of the trace tensor
/// plus a trace-free part; returns the scalar and whether the trace-free part
/// vanishes exactly (it does whenever Q* is the adjugate of Q).
std::pair<Scalar, bool> d2_check(const Poly& Qstar_in_e, const Poly& Q_in_x);

}  // namespace lueroth
