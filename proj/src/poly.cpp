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

#include "lueroth/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace lueroth {

Mono Mono::of(std::initializer_list<std::pair<Var, int>> powers) {
    Mono m;
    for (const auto& [v, p] : powers) {
        m.exp[static_cast<int>(v)] = static_cast<uint8_t>(m.exp[static_cast<int>(v)] + p);
    }
    return m;
}

Poly Poly::constant(const Scalar& c) { return term(Mono::one(), c); }

Poly Poly::var(Var v, int power) {
    Mono m;
    m.exp[static_cast<int>(v)] = static_cast<uint8_t>(power);
    return term(m, Scalar(1));
}

Poly Poly::term(const Mono& m, const Scalar& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Poly Poly::linear_form(const std::array<Scalar, 3>& c, bool in_e) {
    Poly p;
    for (int i = 0; i < 3; ++i) {
        p.add_term(Mono::of({{in_e ? e_var(i) : x_var(i), 1}}), c[i]);
    }
    return p;
}

Poly& Poly::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return *this;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Mono m;
            for (int i = 0; i < 6; ++i) m.exp[i] = static_cast<uint8_t>(m1.exp[i] + m2.exp[i]);
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    Poly r = Poly::constant(Scalar(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

Poly Poly::diff(Var v) const {
    int vi = static_cast<int>(v);
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.exp[vi] == 0) continue;
        Mono dm = m;
        dm.exp[vi] = static_cast<uint8_t>(dm.exp[vi] - 1);
        r.add_term(dm, c * Scalar(m.exp[vi]));
    }
    return r;
}

namespace {
Scalar scalar_pow(const Scalar& s, int n) {
    Scalar r(1);
    for (int i = 0; i < n; ++i) r *= s;
    return r;
}
}  // namespace

Poly Poly::eval_x(const std::array<Scalar, 3>& p) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (int i = 0; i < 3; ++i) v *= scalar_pow(p[i], m.exp[i]);
        Mono em;
        for (int i = 3; i < 6; ++i) em.exp[i] = m.exp[i];
        r.add_term(em, v);
    }
    return r;
}

Poly Poly::eval_e(const std::array<Scalar, 3>& p) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (int i = 0; i < 3; ++i) v *= scalar_pow(p[i], m.exp[3 + i]);
        Mono xm;
        for (int i = 0; i < 3; ++i) xm.exp[i] = m.exp[i];
        r.add_term(xm, v);
    }
    return r;
}

Scalar Poly::eval(const std::array<Scalar, 3>& xs, const std::array<Scalar, 3>& es) const {
    Scalar total(0);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (int i = 0; i < 3; ++i) v *= scalar_pow(xs[i], m.exp[i]);
        for (int i = 0; i < 3; ++i) v *= scalar_pow(es[i], m.exp[3 + i]);
        total += v;
    }
    return total;
}

Poly Poly::subst_x(const std::array<Poly, 3>& s) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(c);
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < m.exp[i]; ++k) t = t * s[i];
        }
        Mono em;
        for (int i = 3; i < 6; ++i) em.exp[i] = m.exp[i];
        r += t * Poly::term(em, Scalar(1));
    }
    return r;
}

Poly Poly::subst_e(const std::array<Poly, 3>& s) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(c);
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < m.exp[3 + i]; ++k) t = t * s[i];
        }
        Mono xm;
        for (int i = 0; i < 3; ++i) xm.exp[i] = m.exp[i];
        r += t * Poly::term(xm, Scalar(1));
    }
    return r;
}

Scalar Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<std::pair<int, int>> Poly::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    auto it = terms_.begin();
    std::pair<int, int> deg{it->first.xdeg(), it->first.edeg()};
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.xdeg() != deg.first || m.edeg() != deg.second) return std::nullopt;
    }
    return deg;
}

bool Poly::is_bihomogeneous(int xd, int ed) const {
    if (terms_.empty()) return true;  // zero lives in every bidegree
    auto d = bidegree();
    return d && d->first == xd && d->second == ed;
}

int Poly::max_xdeg() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.xdeg());
    }
    return d;
}

int Poly::max_edeg() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.edeg());
    }
    return d;
}

long Poly::field_d() const {
    long d = 0;
    for (const auto& [m, c] : terms_) {
        (void)m;
        d = join_fields(d, c.ext_d());
    }
    return d;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[6] = {"x1", "x2", "x3", "e1", "e2", "e3"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < 6; ++i) {
            if (m.exp[i] == 0) continue;
            os << "*" << names[i];
            if (m.exp[i] > 1) os << "^" << int(m.exp[i]);
        }
    }
    return os.str();
}

// ---- conics and Gram matrices ----------------------------------------------

Scalar det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate3(const Mat3& m) {
    Mat3 a;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int r1 = (j + 1) % 3, r2 = (j + 2) % 3;
            int c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            // adj = transpose of the cofactor matrix
            a[i][j] = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
        }
    }
    return a;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Scalar s(0);
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    }
    return r;
}

Mat3 gram_of_conic(const Poly& q, bool in_e) {
    if (!q.is_bihomogeneous(in_e ? 0 : 2, in_e ? 2 : 0)) {
        throw std::invalid_argument("not a quadratic form in the expected group");
    }
    Mat3 g;
    Scalar half = Scalar(1) / Scalar(2);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Var vi = in_e ? e_var(i) : x_var(i);
            Var vj = in_e ? e_var(j) : x_var(j);
            Scalar c = q.coeff(Mono::of({{vi, 1}, {vj, 1}}));
            g[i][j] = (i == j) ? c : c * half;
        }
    }
    return g;
}

Poly conic_from_gram(const Mat3& g, bool in_e) {
    Poly q;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            Var vi = in_e ? e_var(i) : x_var(i);
            Var vj = in_e ? e_var(j) : x_var(j);
            Scalar c = (i == j) ? g[i][i] : g[i][j] + g[j][i];
            q.add_term(Mono::of({{vi, 1}, {vj, 1}}), c);
        }
    }
    return q;
}

Poly adjugate_conic(const Poly& q_in_x) {
    return conic_from_gram(adjugate3(gram_of_conic(q_in_x, false)), true);
}

Poly compose_linear_x(const Poly& f, const Mat3& g) {
    std::array<Poly, 3> s;
    for (int i = 0; i < 3; ++i) s[i] = Poly::linear_form({g[i][0], g[i][1], g[i][2]});
    return f.subst_x(s);
}

const std::array<Mono, 6>& conic_monomials(bool in_e) {
    auto make = [](bool e) {
        std::array<Mono, 6> b;
        int k = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i; j < 3; ++j) {
                b[k++] = Mono::of({{e ? e_var(i) : x_var(i), 1}, {e ? e_var(j) : x_var(j), 1}});
            }
        }
        return b;
    };
    static const std::array<Mono, 6> bx = make(false);
    static const std::array<Mono, 6> be = make(true);
    return in_e ? be : bx;
}

int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return idx[i][j];
}

namespace {
template <int D, size_t N>
std::array<Mono, N> degree_monomials() {
    std::array<Mono, N> out;
    size_t k = 0;
    for (int a = D; a >= 0; --a) {
        for (int b = D - a; b >= 0; --b) {
            int c = D - a - b;
            Mono m;
            m.exp[0] = static_cast<uint8_t>(a);
            m.exp[1] = static_cast<uint8_t>(b);
            m.exp[2] = static_cast<uint8_t>(c);
            out[k++] = m;
        }
    }
    // Mono order is lex on the exponent array; re-sort so indices agree with it.
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

const std::array<Mono, 15>& quartic_monomials() {
    static const std::array<Mono, 15> b = degree_monomials<4, 15>();
    return b;
}

const std::array<Mono, 10>& cubic_monomials() {
    static const std::array<Mono, 10> b = degree_monomials<3, 10>();
    return b;
}

}  // namespace lueroth
