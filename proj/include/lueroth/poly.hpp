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

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lueroth/scalar.hpp"

namespace lueroth {

/// The six ambient variables: point coordinates x1..x3 and dual
/// coordinates e1..e3.
enum Var : int { X1 = 0, X2 = 1, X3 = 2, E1 = 3, E2 = 4, E3 = 5 };

inline Var x_var(int i) { return static_cast<Var>(i); }      // i in 0..2
inline Var e_var(int i) { return static_cast<Var>(3 + i); }  // i in 0..2

/// Exponent vector (x1,x2,x3 | e1,e2,e3). Ordered lexicographically, which
/// fixes the term order used everywhere (matrix bases, canonical forms, IO).
struct Mono {
    std::array<uint8_t, 6> exp{};

    int xdeg() const { return exp[0] + exp[1] + exp[2]; }
    int edeg() const { return exp[3] + exp[4] + exp[5]; }

    auto operator<=>(const Mono&) const = default;

    static Mono one() { return Mono{}; }
    static Mono of(std::initializer_list<std::pair<Var, int>> powers);
};

/// Sparse exact polynomial in the six bigraded variables. Zero coefficients
/// are never stored; term order is the fixed Mono order.
class Poly {
  public:
    Poly() = default;

    static Poly constant(const Scalar& c);
    static Poly var(Var v, int power = 1);
    static Poly term(const Mono& m, const Scalar& c);
    /// c1*x1 + c2*x2 + c3*x3 (or the e-group).
    static Poly linear_form(const std::array<Scalar, 3>& c, bool in_e = false);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Adds c * m in place, erasing the term if the sum cancels.
    Poly& add_term(const Mono& m, const Scalar& c);

    Poly pow(int n) const;

    /// Formal partial derivative.
    Poly diff(Var v) const;

    /// Substitutes scalars for the x-group (result is a polynomial in e only).
    Poly eval_x(const std::array<Scalar, 3>& p) const;
    /// Substitutes scalars for the e-group.
    Poly eval_e(const std::array<Scalar, 3>& p) const;
    /// Full substitution of both groups.
    Scalar eval(const std::array<Scalar, 3>& xs, const std::array<Scalar, 3>& es) const;

    /// x_i -> s[i]; the substituted polynomials may use any variables.
    Poly subst_x(const std::array<Poly, 3>& s) const;
    /// e_i -> s[i].
    Poly subst_e(const std::array<Poly, 3>& s) const;

    Scalar coeff(const Mono& m) const;
    const std::map<Mono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// (x-degree, e-degree) if every term carries the same pair.
    std::optional<std::pair<int, int>> bidegree() const;
    bool is_bihomogeneous(int xd, int ed) const;
    int max_xdeg() const;
    int max_edeg() const;

    /// Join of the coefficient extensions (0 when all rational).
    long field_d() const;

    std::string str() const;

  private:
    std::map<Mono, Scalar> terms_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

// ---- conics, Gram matrices, adjugates -------------------------------------

using Mat3 = std::array<std::array<Scalar, 3>, 3>;

Scalar det3(const Mat3& m);
Mat3 adjugate3(const Mat3& m);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);

/// Symmetric Gram matrix of a quadratic form; the off-diagonal entries are
/// half the mixed coefficients (the convention fixed for the whole library).
Mat3 gram_of_conic(const Poly& q, bool in_e);
Poly conic_from_gram(const Mat3& g, bool in_e);

/// Dual conic of a quadratic form in x: the quadratic form in e whose Gram
/// matrix is the adjugate of the input's Gram matrix. Rank <= 1 inputs map
/// to the zero form.
Poly adjugate_conic(const Poly& q_in_x);

/// f(g x): substitutes x_i -> sum_j g[i][j] x_j.
Poly compose_linear_x(const Poly& f, const Mat3& g);

// ---- fixed monomial bases ---------------------------------------------------

/// Degree-2 monomials in one group, ordered (11),(12),(13),(22),(23),(33).
const std::array<Mono, 6>& conic_monomials(bool in_e);
/// Index of the unordered pair {i,j} (0-based) in the conic order.
int pair_index(int i, int j);

/// The 15 degree-4 monomials in x, in Mono order.
const std::array<Mono, 15>& quartic_monomials();
/// The 10 degree-3 monomials in x, in Mono order.
const std::array<Mono, 10>& cubic_monomials();

}  // namespace lueroth
