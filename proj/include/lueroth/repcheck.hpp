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

#include <map>
#include <string>
#include <vector>

#include "lueroth/poly.hpp"

namespace lueroth {

/// Rational class function on the five conjugacy classes of S4, in the order
/// e, (12), (12)(34), (123), (1234) with class sizes 1, 6, 3, 8, 6.
struct ClassFunction {
    std::array<mpq_class, 5> v{};

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator*(const ClassFunction& o) const;  // pointwise (tensor product)
    bool operator==(const ClassFunction& o) const { return v == o.v; }
};

extern const std::array<long, 5> kS4ClassSizes;
/// Irreducible characters in the order 1, eps, V2, V3, V3'.
const std::array<ClassFunction, 5>& s4_irreducible_characters();
const std::array<std::string, 5>& s4_irreducible_names();

/// Class representatives of S4 acting on C^3 as the stabilizer of the frame
/// (1:0:0),(0:1:0),(0:0:1),(1:1:1), normalized to determinant one.
std::array<Mat3, 5> s4_matrices();

/// Character of the representation defined by the class representatives.
ClassFunction character_of(const std::array<Mat3, 5>& reps);
/// Characters of Sym^2 and Lambda^2 of that representation, computed from
/// traces of matrix powers.
ClassFunction sym2_character(const std::array<Mat3, 5>& reps);
ClassFunction lambda2_character(const std::array<Mat3, 5>& reps);
ClassFunction sym2_of(const ClassFunction& chi_g, const ClassFunction& chi_g2);
ClassFunction lambda2_of(const ClassFunction& chi_g, const ClassFunction& chi_g2);

/// Multiplicities over {1, eps, V2, V3, V3'}; throws when an inner product is
/// negative or non-integral (the input is then not a character).
std::array<long, 5> decompose_s4(const ClassFunction& chi);

long s4_dimension(const std::array<long, 5>& mult);

/// Integer-multiplicity multiset of SL2 weights, symmetric under negation for
/// genuine representations.
struct WeightMultiset {
    std::map<int, long> mult;

    bool negation_symmetric() const;
    long total() const;
    /// Weights of the irreducible on binary forms of degree n: -n, -n+2, .., n.
    static WeightMultiset irreducible(int n);
};

/// Weight multiset of the k-th symmetric power.
WeightMultiset sym_power(int k, const WeightMultiset& base);

/// Greedy top-weight peeling into irreducibles; returns (degree, multiplicity)
/// pairs in descending degree. Throws when peeling goes negative.
std::vector<std::pair<int, long>> sl2_plethysm(int sym_power_k, const WeightMultiset& base);

}  // namespace lueroth
