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
#include <vector>

#include "lueroth/linalg.hpp"
#include "lueroth/poly.hpp"

namespace lueroth {

/// The 6x6 matrix of the map sending a dual conic (a second-order constant
/// coefficient differential operator) to the conic obtained by applying it to
/// a fixed quartic. Rows and columns both run over the conic monomial order
/// (11),(12),(13),(22),(23),(33); the entry at (u, v) is the fourth-order
/// derivative of the quartic along u+v, which makes the matrix symmetric and
/// linear in the quartic's coefficients.
struct CatalecticantData {
    Poly quartic;
    ExactMatrix lc;  // 6x6, symmetric
};

CatalecticantData catalecticant(const Poly& quartic_in_x);

/// Kernel of the catalecticant map, re-expressed as dual conics in e.
std::vector<Poly> catalecticant_kernel(const Poly& quartic_in_x);

/// Sum of fourth powers of the given linear forms in x.
Poly clebsch_from_lines(const std::array<Poly, 5>& lines);

/// Five lines with their ten pairwise intersection points. `generic` is set
/// when no two lines are proportional and no three are concurrent (certified
/// by 3x3 determinants of coefficient triples).
struct Pentagon {
    std::array<Poly, 5> lines;                        // linear forms in x
    std::array<std::array<Scalar, 3>, 10> vertices;   // projective points, order (i<j) lex
    bool generic = false;
};

Pentagon pentagon_from_lines(const std::array<Poly, 5>& lines);

/// Canonical basis of the space of quartics vanishing at all ten vertices.
/// Throws for degenerate pentagons (the dimension count is unreliable there).
std::vector<Poly> lueroth_space_from_pentagon(const Pentagon& p);

}  // namespace lueroth
