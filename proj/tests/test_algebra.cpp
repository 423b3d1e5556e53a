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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lueroth/poly.hpp"
#include "lueroth/rng.hpp"

using namespace lueroth;

namespace {
Poly random_poly(Rng& rng, int nterms) {
    Poly p;
    for (int t = 0; t < nterms; ++t) {
        Mono m;
        for (int i = 0; i < 6; ++i) m.exp[i] = static_cast<uint8_t>(rng.range(0, 2));
        p.add_term(m, Scalar(rng.range(-9, 9)));
    }
    return p;
}

Poly random_poly_ext(Rng& rng, int nterms) {
    Poly p;
    for (int t = 0; t < nterms; ++t) {
        Mono m;
        for (int i = 0; i < 6; ++i) m.exp[i] = static_cast<uint8_t>(rng.range(0, 2));
        p.add_term(m, Scalar(mpq_class(rng.range(-9, 9)), mpq_class(rng.range(-9, 9)), -2));
    }
    return p;
}
}  // namespace

TEST_CASE("rationals stay canonical") {
    Scalar a = Scalar::from_string("4/6");
    CHECK(a.rat_part().get_str() == "2/3");
    Scalar b = Scalar::from_string("-3/-9");
    CHECK(b.rat_part().get_str() == "1/3");
    CHECK((a + b) == Scalar(1));
}

TEST_CASE("quadratic extension arithmetic") {
    Scalar t = Scalar::sqrt_of(-2);
    CHECK(t * t == Scalar(-2));
    Scalar z = Scalar(1) + t;
    CHECK(z * z.conj() == Scalar(3));  // norm 1 - (-2) = 3
    CHECK(z * z.inverse() == Scalar(1));
    CHECK_THROWS_AS(Scalar::sqrt_of(4), std::invalid_argument);
    CHECK_THROWS_AS((void)(t + Scalar::sqrt_of(5)), FieldMismatch);
}

TEST_CASE("derivatives") {
    Poly x1 = Poly::var(X1);
    CHECK(x1.pow(3).diff(X1) == Scalar(3) * x1.pow(2));
    Poly p = Poly::var(X1).pow(2) * Poly::var(E2);
    CHECK(p.diff(E2) == Poly::var(X1).pow(2));
    Poly s = Poly::var(X1) + Poly::var(X2) + Poly::var(X3);
    CHECK(s.pow(3).diff(X3) == Scalar(3) * s.pow(2));
}

TEST_CASE("evaluation") {
    Poly p = Poly::var(X1).pow(2) + Poly::var(X2).pow(2);
    CHECK(p.eval({Scalar(1), Scalar(2), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(0)}) == Scalar(5));

    Scalar t = Scalar::sqrt_of(-2);
    Poly q = Poly::var(E1).pow(2) + Poly::var(E2).pow(2) + Poly::var(E3).pow(2);
    CHECK(q.eval_e({Scalar(1), t, Scalar(1)}).is_zero());

    Poly g;
    g.add_term(Mono::of({{E1, 2}}), Scalar(1));
    g.add_term(Mono::of({{E1, 1}, {E2, 1}}), Scalar(-1));
    g.add_term(Mono::of({{E2, 2}}), Scalar(1));
    g.add_term(Mono::of({{E1, 1}, {E3, 1}}), Scalar(1));
    g.add_term(Mono::of({{E2, 1}, {E3, 1}}), Scalar(1));
    CHECK(g.eval_e({t, Scalar(1), Scalar(1)}).is_zero());
}

TEST_CASE("adjugate conics") {
    Poly id = Poly::var(X1).pow(2) + Poly::var(X2).pow(2) + Poly::var(X3).pow(2);
    Poly id_e = Poly::var(E1).pow(2) + Poly::var(E2).pow(2) + Poly::var(E3).pow(2);
    CHECK(adjugate_conic(id) == id_e);

    Poly diag = Scalar(2) * Poly::var(X1).pow(2) + Scalar(3) * Poly::var(X2).pow(2) +
                Scalar(5) * Poly::var(X3).pow(2);
    Poly expect = Scalar(15) * Poly::var(E1).pow(2) + Scalar(10) * Poly::var(E2).pow(2) +
                  Scalar(6) * Poly::var(E3).pow(2);
    CHECK(adjugate_conic(diag) == expect);

    CHECK(adjugate_conic(Poly::var(X1).pow(2)).is_zero());
}

TEST_CASE("adjugate twice is det times the identity map") {
    Rng rng(7);
    for (int n = 0; n < 20; ++n) {
        Poly q = random_nondegenerate_conic(rng);
        Mat3 g = gram_of_conic(q, false);
        Mat3 a2 = adjugate3(adjugate3(g));
        Scalar d = det3(g);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) CHECK(a2[i][j] == d * g[i][j]);
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(11);
    for (int n = 0; n < 10; ++n) {
        Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
    for (int n = 0; n < 5; ++n) {
        Poly a = random_poly_ext(rng, 3), b = random_poly_ext(rng, 3), c = random_poly_ext(rng, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("derivatives commute and Euler identity") {
    Rng rng(13);
    for (int n = 0; n < 10; ++n) {
        Poly p = random_poly(rng, 5);
        CHECK(p.diff(X1).diff(E2) == p.diff(E2).diff(X1));
        CHECK(p.diff(X2).diff(X3) == p.diff(X3).diff(X2));
    }
    for (int deg : {1, 2, 3, 4}) {
        Poly f = random_form(rng, deg, false);
        Poly euler;
        for (int i = 0; i < 3; ++i) euler += Poly::var(x_var(i)) * f.diff(x_var(i));
        CHECK(euler == Scalar(deg) * f);
    }
}

TEST_CASE("bidegree bookkeeping") {
    Poly tr;
    for (int i = 0; i < 3; ++i) tr.add_term(Mono::of({{x_var(i), 1}, {e_var(i), 1}}), Scalar(1));
    auto d = tr.bidegree();
    REQUIRE(d.has_value());
    CHECK(d->first == 1);
    CHECK(d->second == 1);
    Poly mixed = tr + Poly::var(X1);
    CHECK(!mixed.bidegree().has_value());
    CHECK(tr.is_bihomogeneous(1, 1));
}
