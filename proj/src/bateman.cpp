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

#include "lueroth/bateman.hpp"

#include <stdexcept>

namespace lueroth {

SyzygyMatrix syzygy_from_QC(const Poly& Q, const Poly& C) {
    if (!Q.is_bihomogeneous(2, 0)) throw std::invalid_argument("Q must be a quadratic form in x");
    if (!C.is_bihomogeneous(3, 0)) throw std::invalid_argument("C must be a cubic form in x");
    SyzygyMatrix m;
    for (int i = 0; i < 3; ++i) {
        m.lin[i] = Q.diff(x_var(i));
        m.quad[i] = C.diff(x_var(i));
    }
    return m;
}

std::pair<SyzygyMatrix, Mat3> normal_form(const SyzygyMatrix& m) {
    // L[r][i] = coefficient of x_r in l_i; the column operation is L^{-1}.
    Mat3 L;
    for (int i = 0; i < 3; ++i) {
        for (int r = 0; r < 3; ++r) L[r][i] = m.lin[i].coeff(Mono::of({{x_var(r), 1}}));
    }
    Scalar dl = det3(L);
    if (dl.is_zero()) throw std::invalid_argument("linear row is dependent; no normal form");
    Mat3 adj = adjugate3(L);
    Mat3 A;
    Scalar inv = dl.inverse();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) A[i][j] = adj[i][j] * inv;
    }
    SyzygyMatrix out;
    for (int j = 0; j < 3; ++j) {
        Poly lj, qj;
        for (int i = 0; i < 3; ++i) {
            lj += m.lin[i] * A[i][j];
            qj += m.quad[i] * A[i][j];
        }
        out.lin[j] = std::move(lj);
        out.quad[j] = std::move(qj);
    }
    return {out, A};
}

BatemanTuple BatemanTuple::from_rows(const std::array<Poly, 3>& quad_rows, bool projected) {
    BatemanTuple t;
    for (int i = 0; i < 3; ++i) {
        if (!quad_rows[i].is_bihomogeneous(2, 0)) {
            throw std::invalid_argument("tuple rows must be quadratic forms in x");
        }
        for (int j = 0; j < 3; ++j) {
            for (int k = j; k < 3; ++k) {
                t.c_[i][pair_index(j, k)] = quad_rows[i].coeff(Mono::of({{x_var(j), 1}, {x_var(k), 1}}));
            }
        }
    }
    t.projected_ = projected;
    return t;
}

const Scalar& BatemanTuple::d(int i, int j, int k) const { return c_[i][pair_index(j, k)]; }
Scalar& BatemanTuple::d(int i, int j, int k) { return c_[i][pair_index(j, k)]; }

std::array<Poly, 3> BatemanTuple::rows() const {
    std::array<Poly, 3> r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = j; k < 3; ++k) {
                r[i].add_term(Mono::of({{x_var(j), 1}, {x_var(k), 1}}), c_[i][pair_index(j, k)]);
            }
        }
    }
    return r;
}

BatemanTuple BatemanTuple::operator+(const BatemanTuple& o) const {
    BatemanTuple r;
    for (int i = 0; i < 3; ++i) {
        for (int p = 0; p < 6; ++p) r.c_[i][p] = c_[i][p] + o.c_[i][p];
    }
    r.projected_ = projected_ && o.projected_;
    return r;
}

BatemanTuple BatemanTuple::operator*(const Scalar& s) const {
    BatemanTuple r;
    for (int i = 0; i < 3; ++i) {
        for (int p = 0; p < 6; ++p) r.c_[i][p] = c_[i][p] * s;
    }
    r.projected_ = projected_;
    return r;
}

bool BatemanTuple::is_zero() const {
    for (int i = 0; i < 3; ++i) {
        for (int p = 0; p < 6; ++p) {
            if (!c_[i][p].is_zero()) return false;
        }
    }
    return true;
}

Poly tuple_divergence(const BatemanTuple& t) {
    auto rows = t.rows();
    Poly s;
    for (int i = 0; i < 3; ++i) s += rows[i].diff(x_var(i));
    return s;
}

namespace {
BatemanTuple project_rows(const std::array<Poly, 3>& rows) {
    Poly s;
    for (int i = 0; i < 3; ++i) s += rows[i].diff(x_var(i));
    Scalar quarter = Scalar(1) / Scalar(4);
    std::array<Poly, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[i] = rows[i] - Poly::var(x_var(i)) * s * quarter;
    }
    return BatemanTuple::from_rows(out, true);
}
}  // namespace

BatemanTuple v12_project(const SyzygyMatrix& normal) {
    for (int i = 0; i < 3; ++i) {
        if (normal.lin[i] != Poly::var(x_var(i))) {
            throw std::invalid_argument("matrix is not in normal form (first row must be x1,x2,x3)");
        }
    }
    return project_rows(normal.quad);
}

BatemanTuple project_tuple(const BatemanTuple& t) { return project_rows(t.rows()); }

BatemanTuple b_pairing(const Poly& Qstar, const Poly& C) {
    if (!Qstar.is_bihomogeneous(0, 2)) throw std::invalid_argument("Q* must be a quadratic form in e");
    if (!C.is_bihomogeneous(3, 0)) throw std::invalid_argument("C must be a cubic form in x");
    // Raw tensor sum_i dQ*/de_i (x) dC/dx_i, assembled per e-slot.
    std::array<Poly, 3> rows;
    for (int i = 0; i < 3; ++i) {
        Poly dq = Qstar.diff(e_var(i));  // linear in e
        Poly dc = C.diff(x_var(i));      // quadratic in x
        for (int a = 0; a < 3; ++a) {
            Scalar g = dq.coeff(Mono::of({{e_var(a), 1}}));
            if (!g.is_zero()) rows[a] += dc * g;
        }
    }
    BatemanTuple t = project_rows(rows);
    t.set_provenance(Qstar, C);
    return t;
}

std::pair<Scalar, bool> d2_check(const Poly& Qstar, const Poly& Q) {
    if (!Qstar.is_bihomogeneous(0, 2)) throw std::invalid_argument("Q* must be a quadratic form in e");
    if (!Q.is_bihomogeneous(2, 0)) throw std::invalid_argument("Q must be a quadratic form in x");
    Poly pairing;
    for (int i = 0; i < 3; ++i) {
        pairing += Qstar.diff(e_var(i)) * Q.diff(x_var(i));
    }
    // pairing = s * (x1 e1 + x2 e2 + x3 e3) + trace-free part
    Scalar tr_sum(0);
    for (int i = 0; i < 3; ++i) tr_sum += pairing.coeff(Mono::of({{x_var(i), 1}, {e_var(i), 1}}));
    Scalar s = tr_sum / Scalar(3);
    Poly trace_part;
    for (int i = 0; i < 3; ++i) trace_part.add_term(Mono::of({{x_var(i), 1}, {e_var(i), 1}}), s);
    Poly trace_free = pairing - trace_part;
    return {s, trace_free.is_zero()};
}

}  // namespace lueroth
