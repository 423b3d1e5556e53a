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

#include "lueroth/morley.hpp"

#include "lueroth/rng.hpp"

namespace lueroth {

std::string MorleyConvention::str() const {
    std::string s = "eslot=";
    s += first_index_is_e ? "first" : "last";
    s += ",diag=";
    s += diag_derivative ? "derivative" : "coefficient";
    s += ",vec=";
    s += half_basis_vec ? "half-basis" : "monomial";
    return s;
}

std::vector<MorleyConvention> morley_convention_candidates() {
    std::vector<MorleyConvention> v;
    for (bool role : {true, false}) {
        for (bool diag : {true, false}) {
            for (bool vec : {true, false}) v.push_back({role, diag, vec});
        }
    }
    return v;
}

namespace {

struct DeltaRef {
    int sign;
    int i, j, k;  // 0-based three-index symbol, symmetric in (j, k)
};

// The fifteen independent entries of the skew matrix, upper triangle in row
// order; rows and columns run over the conic basis (11),(12),(13),(22),(23),(33).
struct EntryPattern {
    int row, col;
    std::vector<DeltaRef> terms;
};

const std::vector<EntryPattern>& entry_patterns() {
    static const std::vector<EntryPattern> p = {
        {0, 1, {{+1, 2, 0, 0}}},
        {0, 2, {{-1, 1, 0, 0}}},
        {0, 3, {{+1, 2, 1, 0}}},
        {0, 4, {{-1, 1, 1, 0}, {+1, 2, 2, 0}}},
        {0, 5, {{-1, 1, 2, 0}}},
        {1, 2, {{+1, 0, 0, 0}, {-1, 1, 1, 0}, {-1, 2, 2, 0}}},
        {1, 3, {{+1, 2, 1, 1}}},
        {1, 4, {{+1, 0, 1, 0}, {-1, 1, 1, 1}, {+1, 2, 2, 1}}},
        {1, 5, {{+1, 0, 2, 0}, {-1, 1, 2, 1}}},
        {2, 3, {{-1, 0, 1, 0}, {+1, 2, 2, 1}}},
        {2, 4, {{-1, 0, 2, 0}, {-1, 1, 2, 1}, {+1, 2, 2, 2}}},
        {2, 5, {{-1, 1, 2, 2}}},
        {3, 4, {{+1, 0, 1, 1}}},
        {3, 5, {{+1, 0, 2, 1}}},
        {4, 5, {{+1, 0, 2, 2}}},
    };
    return p;
}

Scalar delta_value(const BatemanTuple& t, const DeltaRef& r, const MorleyConvention& conv) {
    int eslot, xa, xb;
    if (conv.first_index_is_e) {
        eslot = r.i;
        xa = r.j;
        xb = r.k;
    } else {
        eslot = r.k;
        xa = r.i;
        xb = r.j;
    }
    Scalar v = t.d(eslot, xa, xb);
    if (conv.diag_derivative && xa == xb) v = v * Scalar(2);
    return r.sign > 0 ? v : -v;
}

}  // namespace

ExactMatrix morley_matrix(const BatemanTuple& t, const MorleyConvention& conv) {
    ExactMatrix m(6, 6);
    for (const auto& e : entry_patterns()) {
        Scalar v(0);
        for (const auto& d : e.terms) v += delta_value(t, d, conv);
        m.at(e.row, e.col) = v;
        m.at(e.col, e.row) = -v;
    }
    return m;
}

std::vector<Scalar> conic_vec(const Poly& q, const MorleyConvention& conv) {
    if (!q.is_zero() && !q.is_bihomogeneous(0, 2)) {
        throw std::invalid_argument("conic_vec expects a quadratic form in e");
    }
    const auto& mons = conic_monomials(true);
    std::vector<Scalar> v(6);
    for (int k = 0; k < 6; ++k) {
        v[k] = q.coeff(mons[k]);
        // diagonal monomials are half-basis elements: A e1^2 = 2A * (e1^2/2)
        if (conv.half_basis_vec && (k == 0 || k == 3 || k == 5)) v[k] = v[k] * Scalar(2);
    }
    return v;
}

Poly conic_unvec(const std::vector<Scalar>& v, const MorleyConvention& conv) {
    if (v.size() != 6) throw std::invalid_argument("conic vector must have 6 entries");
    const auto& mons = conic_monomials(true);
    Scalar half = Scalar(1) / Scalar(2);
    Poly q;
    for (int k = 0; k < 6; ++k) {
        Scalar c = v[k];
        if (conv.half_basis_vec && (k == 0 || k == 3 || k == 5)) c = c * half;
        q.add_term(mons[k], c);
    }
    return q;
}

Poly reference_qstar() {
    Poly q;
    for (int i = 0; i < 3; ++i) q.add_term(Mono::of({{e_var(i), 2}}), Scalar(1));
    return q;
}

Poly reference_cubic() {
    Poly s = Poly::var(X1) + Poly::var(X2) + Poly::var(X3);
    return Poly::var(X1).pow(3) + Poly::var(X2).pow(3) - Poly::var(X3).pow(3) - s.pow(3);
}

ConicPencil reference_pencil() {
    Poly g1 = reference_qstar();
    Poly g2;
    g2.add_term(Mono::of({{E1, 2}}), Scalar(1));
    g2.add_term(Mono::of({{E1, 1}, {E2, 1}}), Scalar(-1));
    g2.add_term(Mono::of({{E2, 2}}), Scalar(1));
    g2.add_term(Mono::of({{E1, 1}, {E3, 1}}), Scalar(1));
    g2.add_term(Mono::of({{E2, 1}, {E3, 1}}), Scalar(1));
    return pencil_from_conics({g1, g2});
}

ConicPencil pencil_from_conics(const std::vector<Poly>& gens) {
    const auto& mons = conic_monomials(true);
    ExactMatrix m(gens.size(), 6);
    for (size_t r = 0; r < gens.size(); ++r) {
        for (int k = 0; k < 6; ++k) m.at(r, k) = gens[r].coeff(mons[k]);
    }
    RrefResult rr = rref(m);
    if (rr.rank != 2) throw std::invalid_argument("pencil generators do not span a 2-dimensional space");
    std::array<Poly, 2> g;
    for (int r = 0; r < 2; ++r) {
        for (int k = 0; k < 6; ++k) g[r].add_term(mons[k], rr.mat.at(r, k));
    }
    return {g[0], g[1]};
}

namespace {

bool convention_passes(const MorleyConvention& conv) {
    // (a) the matrix of the pairing kills the dual conic, on seeded pairs
    Rng rng(0x5ca1ab1e);
    for (int n = 0; n < 50; ++n) {
        auto [q, c] = random_bateman_pair(rng);
        Poly qstar = adjugate_conic(q);
        BatemanTuple t = b_pairing(qstar, c);
        ExactMatrix m = morley_matrix(t, conv);
        for (const Scalar& s : m.mul_vec(conic_vec(qstar, conv))) {
            if (!s.is_zero()) return false;
        }
    }
    // (b) the reference configuration reproduces its kernel pencil
    BatemanTuple t = b_pairing(reference_qstar(), reference_cubic());
    ExactMatrix m = morley_matrix(t, conv);
    auto ker = kernel_basis(m);
    if (ker.size() != 2) return false;
    std::vector<Poly> gens;
    for (const auto& v : ker) gens.push_back(conic_unvec(v, conv));
    try {
        return pencil_from_conics(gens) == reference_pencil();
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace

std::vector<MorleyConvention> morley_convention_survey() {
    std::vector<MorleyConvention> passing;
    for (const auto& conv : morley_convention_candidates()) {
        if (convention_passes(conv)) passing.push_back(conv);
    }
    return passing;
}

MorleyConvention calibrate_morley_convention() {
    auto passing = morley_convention_survey();
    if (passing.empty()) {
        throw std::logic_error("no convention satisfies the kernel conditions; matrix construction is broken");
    }
    return passing.front();
}

const MorleyConvention& morley_convention() {
    static const MorleyConvention conv = calibrate_morley_convention();
    return conv;
}

ConicPencil kernel_pencil(const BatemanTuple& t) {
    ExactMatrix m = morley_matrix(t);
    auto ker = kernel_basis(m);
    size_t rank = 6 - ker.size();
    if (rank != 4) throw RankError(rank);
    std::vector<Poly> gens;
    for (const auto& v : ker) gens.push_back(conic_unvec(v));
    return pencil_from_conics(gens);
}

Scalar pfaffian_value(const BatemanTuple& t) { return pfaffian(morley_matrix(t)); }

namespace {

// Rows of the raw pairing tensor of a dual conic against a cubic, per e-slot.
std::array<Poly, 3> pairing_rows(const Poly& dual_conic, const Poly& cubic) {
    std::array<Poly, 3> rows;
    for (int i = 0; i < 3; ++i) {
        Poly dq = dual_conic.diff(e_var(i));
        Poly dc = cubic.diff(x_var(i));
        for (int a = 0; a < 3; ++a) {
            Scalar g = dq.coeff(Mono::of({{e_var(a), 1}}));
            if (!g.is_zero()) rows[a] += dc * g;
        }
    }
    return rows;
}

// h[i][p] = coefficient of e_p in dQ*/de_i (symmetric).
Mat3 derivative_matrix(const Poly& qstar) {
    Mat3 h;
    for (int i = 0; i < 3; ++i) {
        Poly d = qstar.diff(e_var(i));
        for (int p = 0; p < 3; ++p) h[i][p] = d.coeff(Mono::of({{e_var(p), 1}}));
    }
    return h;
}

// Twisted differential of quadratic rows into the 9 coordinates
// (wedge pair (p<q)) x (coefficient of x_k).
std::array<Scalar, 9> twisted_differential(const std::array<Poly, 3>& u, const Mat3& h) {
    static const int pq[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::array<Scalar, 9> out{};
    for (int w = 0; w < 3; ++w) {
        int p = pq[w][0], q = pq[w][1];
        Poly comp;
        for (int i = 0; i < 3; ++i) {
            comp += u[q].diff(x_var(i)) * h[i][p] - u[p].diff(x_var(i)) * h[i][q];
        }
        for (int k = 0; k < 3; ++k) out[w * 3 + k] = comp.coeff(Mono::of({{x_var(k), 1}}));
    }
    return out;
}

}  // namespace

ExactMatrix tangent_system(const Poly& Qstar, const Poly& C) {
    if (!Qstar.is_bihomogeneous(0, 2)) throw std::invalid_argument("Q* must be a quadratic form in e");
    if (!C.is_zero() && !C.is_bihomogeneous(3, 0)) throw std::invalid_argument("C must be a cubic form in x");
    Mat3 h = derivative_matrix(Qstar);
    const auto& emons = conic_monomials(true);

    ExactMatrix sys(9, 9);
    for (int col = 0; col < 9; ++col) {
        std::array<Poly, 3> u;
        if (col < 6) {
            Poly rstar = Poly::term(emons[col], Scalar(1));
            u = pairing_rows(rstar, C);
        } else {
            // l = x_m against the trace tensor: u_a = x_m * x_a
            int m = col - 6;
            for (int a = 0; a < 3; ++a) u[a] = Poly::var(x_var(m)) * Poly::var(x_var(a));
        }
        auto v = twisted_differential(u, h);
        for (int r = 0; r < 9; ++r) sys.at(r, col) = v[r];
    }
    return sys;
}

int tangent_rank(const Poly& Qstar, const Poly& C) {
    return static_cast<int>(rank_of(tangent_system(Qstar, C)));
}

bool tangent_relation_holds(const Poly& Qstar, const Poly& C) {
    ExactMatrix sys = tangent_system(Qstar, C);
    Mat3 h = derivative_matrix(Qstar);
    // rows are indexed (wedge pair, x-coefficient); the twisted differential of
    // the output vanishes, which ties the three wedge blocks together:
    //   sum_k  h[k][2]*row((01),k) - h[k][1]*row((02),k) + h[k][0]*row((12),k) = 0
    bool nontrivial = false;
    for (int col = 0; col < 9; ++col) {
        Scalar s(0);
        for (int k = 0; k < 3; ++k) {
            s += h[k][2] * sys.at(0 * 3 + k, col);
            s -= h[k][1] * sys.at(1 * 3 + k, col);
            s += h[k][0] * sys.at(2 * 3 + k, col);
        }
        if (!s.is_zero()) return false;
    }
    for (int k = 0; k < 3; ++k) {
        if (!h[k][0].is_zero() || !h[k][1].is_zero() || !h[k][2].is_zero()) nontrivial = true;
    }
    return nontrivial;
}

}  // namespace lueroth
