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

#include <stdexcept>
#include <string>
#include <vector>

#include "lueroth/bateman.hpp"
#include "lueroth/linalg.hpp"

namespace lueroth {

/// Resolves the conventions the classical skew-matrix formula leaves open:
/// which index of the three-index coordinate symbols names the e-slot,
/// whether diagonal x-pairs carry the derivative factor 2, and how a dual
/// conic turns into a coordinate 6-vector.
struct MorleyConvention {
    bool first_index_is_e = true;  // false: last index names the e-slot
    bool diag_derivative = true;   // delta(i,jj) = 2 * stored coordinate
    bool half_basis_vec = true;    // vec(A e1^2 + B e1e2 + ...) = (2A,B,C,2D,E,2F)

    std::string str() const;
    bool operator==(const MorleyConvention&) const = default;
};

/// All eight candidate conventions in a fixed (lexicographic) order.
std::vector<MorleyConvention> morley_convention_candidates();

/// The candidates that pass both calibration oracles, in candidate order.
std::vector<MorleyConvention> morley_convention_survey();

/// Selects the unique candidate under which (a) the matrix of b(Q*, C) kills
/// vec(Q*) on 50 seeded random pairs and (b) the reference configuration
/// reproduces its known kernel pencil. Throws if none passes; if several pass
/// the lexicographically first is returned (the selection is pinned by tests).
MorleyConvention calibrate_morley_convention();

/// The calibrated convention, computed once and cached.
const MorleyConvention& morley_convention();

/// The 6x6 skew matrix of a tuple: entries are the fixed signed patterns of
/// three-index coordinates, read through the convention.
ExactMatrix morley_matrix(const BatemanTuple& t, const MorleyConvention& conv = morley_convention());

/// Coordinate vector of a dual conic in the order (11),(12),(13),(22),(23),(33).
std::vector<Scalar> conic_vec(const Poly& dual_conic, const MorleyConvention& conv = morley_convention());
Poly conic_unvec(const std::vector<Scalar>& v, const MorleyConvention& conv = morley_convention());

/// Thrown when a tuple's matrix does not have the generic rank 4.
struct RankError : std::runtime_error {
    size_t rank;
    explicit RankError(size_t r)
        : std::runtime_error("morley matrix has rank " + std::to_string(r) + ", expected 4"), rank(r) {}
};

/// Two-dimensional space of dual conics in canonical (reduced-basis) form.
struct ConicPencil {
    Poly g1, g2;
    bool operator==(const ConicPencil&) const = default;
};

/// Canonical form of the span of the given dual conics (must be 2-dimensional).
ConicPencil pencil_from_conics(const std::vector<Poly>& gens);

/// Kernel of the tuple's skew matrix as a canonical pencil of dual conics.
/// Requires rank exactly 4.
ConicPencil kernel_pencil(const BatemanTuple& t);

/// Pfaffian of the tuple's skew matrix; vanishes exactly when rank < 6.
Scalar pfaffian_value(const BatemanTuple& t);

/// The 9x9 system whose kernel is the tangent space of the pure-tensor fibre
/// of the pairing at (Q*, C): unknowns are a dual conic R* (6) and a linear
/// form l (3); equations are the coefficients of d_{Q*}(d_{R*} C + l tr).
ExactMatrix tangent_system(const Poly& Qstar, const Poly& C);
int tangent_rank(const Poly& Qstar, const Poly& C);

/// The rows of the tangent system always satisfy one linear relation (the
/// image lies in the kernel of the next differential); verifies it exactly.
bool tangent_relation_holds(const Poly& Qstar, const Poly& C);

/// The worked configuration used to pin conventions and regressions:
/// Q* = e1^2+e2^2+e3^2 and C = x1^3+x2^3-x3^3-(x1+x2+x3)^3.
Poly reference_qstar();
Poly reference_cubic();
/// Its kernel pencil, spanned by e1^2+e2^2+e3^2 and e1^2-e1e2+e2^2+e1e3+e2e3.
ConicPencil reference_pencil();

}  // namespace lueroth
