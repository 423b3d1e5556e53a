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

#include "lueroth/linalg.hpp"
#include "lueroth/rng.hpp"

using namespace lueroth;

namespace {

ExactMatrix random_matrix(Rng& rng, size_t n, long m = 9) {
    ExactMatrix a(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a.at(i, j) = Scalar(rng.range(-m, m));
    }
    return a;
}

ExactMatrix random_skew(Rng& rng, size_t n) {
    ExactMatrix a(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Scalar v(rng.range(-9, 9));
            a.at(i, j) = v;
            a.at(j, i) = -v;
        }
    }
    return a;
}

// independent oracle: cofactor expansion
Scalar det_cofactor(const ExactMatrix& m) {
    size_t n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m.at(0, 0);
    Scalar total(0);
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Scalar t = m.at(0, j) * det_cofactor(minor);
        total += (j % 2 == 0) ? t : -t;
    }
    return total;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(det(ExactMatrix::identity(6)) == Scalar(1));

    ExactMatrix d(3, 3);
    d.at(0, 0) = Scalar(1);
    d.at(1, 1) = Scalar(2);
    d.at(2, 2) = Scalar(3);
    CHECK(det(d) == Scalar(6));

    ExactMatrix rep(3, 3);
    for (size_t j = 0; j < 3; ++j) {
        rep.at(0, j) = Scalar(long(j) + 1);
        rep.at(1, j) = Scalar(long(j) + 1);
        rep.at(2, j) = Scalar(long(j) * 2);
    }
    CHECK(det(rep).is_zero());

    ExactMatrix ns(2, 3);
    CHECK_THROWS_AS(det(ns), std::invalid_argument);
}

TEST_CASE("bareiss equals cofactor oracle") {
    Rng rng(17);
    for (size_t n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            ExactMatrix m = random_matrix(rng, n);
            CHECK(det(m) == det_cofactor(m));
        }
    }
}

TEST_CASE("kernel bases are canonical") {
    CHECK(kernel_basis(ExactMatrix::identity(4)).empty());

    ExactMatrix z(2, 2);
    auto kz = kernel_basis(z);
    REQUIRE(kz.size() == 2);
    CHECK(kz[0][0] == Scalar(1));
    CHECK(kz[0][1] == Scalar(0));
    CHECK(kz[1][0] == Scalar(0));
    CHECK(kz[1][1] == Scalar(1));

    ExactMatrix m(2, 3);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(1);
    m.at(1, 2) = Scalar(1);
    auto km = kernel_basis(m);
    REQUIRE(km.size() == 1);
    CHECK(km[0][0] == Scalar(1));
    CHECK(km[0][1] == Scalar(-1));
    CHECK(km[0][2] == Scalar(0));
}

TEST_CASE("rank plus kernel dimension is the column count") {
    Rng rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        size_t rows = static_cast<size_t>(rng.range(1, 6));
        size_t cols = static_cast<size_t>(rng.range(1, 6));
        ExactMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(rng.range(-3, 3));
        }
        CHECK(rank_of(m) + kernel_basis(m).size() == cols);
    }
}

TEST_CASE("rank of an outer product is one") {
    Rng rng(29);
    ExactMatrix m(4, 4);
    std::array<long, 4> u, v;
    for (auto& x : u) x = rng.nonzero(5);
    for (auto& x : v) x = rng.nonzero(5);
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) m.at(i, j) = Scalar(u[i] * v[j]);
    }
    CHECK(rank_of(m) == 1);
}

TEST_CASE("pfaffian basics") {
    ExactMatrix m2(2, 2);
    m2.at(0, 1) = Scalar(7);
    m2.at(1, 0) = Scalar(-7);
    CHECK(pfaffian(m2) == Scalar(7));

    ExactMatrix m6(6, 6);
    for (int b = 0; b < 3; ++b) {
        m6.at(2 * b, 2 * b + 1) = Scalar(1);
        m6.at(2 * b + 1, 2 * b) = Scalar(-1);
    }
    CHECK(pfaffian(m6) == Scalar(1));

    ExactMatrix odd(3, 3);
    CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);

    ExactMatrix notskew = ExactMatrix::identity(2);
    CHECK_THROWS_WITH_AS(pfaffian(notskew), doctest::Contains("not skew-symmetric"), std::invalid_argument);
}

TEST_CASE("pfaffian squared is the determinant") {
    Rng rng(31);
    for (size_t n : {2, 4, 6}) {
        for (int rep = 0; rep < 8; ++rep) {
            ExactMatrix m = random_skew(rng, n);
            Scalar p = pfaffian(m);
            CHECK(p * p == det(m));
        }
    }
}

TEST_CASE("pfaffian congruence covariance") {
    Rng rng(37);
    for (int rep = 0; rep < 5; ++rep) {
        ExactMatrix m = random_skew(rng, 6);
        ExactMatrix a = random_matrix(rng, 6, 2);
        ExactMatrix amat = a.transposed().mul(m).mul(a);
        CHECK(pfaffian(amat) == det(a) * pfaffian(m));
    }
}

TEST_CASE("rank-4 skew 6x6 has zero pfaffian") {
    Rng rng(41);
    // build a rank-4 skew matrix as B^T S B with S generic skew 4x4
    ExactMatrix s = random_skew(rng, 4);
    ExactMatrix b(4, 6);
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 6; ++j) b.at(i, j) = Scalar(rng.range(-3, 3));
    }
    ExactMatrix m = b.transposed().mul(s).mul(b);
    REQUIRE(rank_of(m) <= 4);
    CHECK(pfaffian(m).is_zero());
}
