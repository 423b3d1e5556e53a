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

#include <complex>
#include <cstdint>
#include <vector>

#include "lueroth/bateman.hpp"
#include "lueroth/poly.hpp"

namespace lueroth {

/// Net of cubics through the seven base points of a syzygy matrix: the 2x2
/// minors N_i (column i deleted, unsigned), satisfying the exact syzygy
/// l1 N1 - l2 N2 + l3 N3 = 0.
struct CubicNet {
    std::array<Poly, 3> minors;
    Poly Q, C;
    bool degenerate = false;  // some minor vanished identically
};

CubicNet net_from_QC(const Poly& Q, const Poly& C);

/// Jacobian determinant of the net, an exact sextic in x; it cuts out the
/// ramification curve of the degree-2 self-map x -> (N1 : N2 : N3).
Poly ramification_sextic(const CubicNet& net);

using CPoint = std::array<std::complex<double>, 3>;

/// The common zeros of the net, computed by resultant elimination and complex
/// root-finding in a seeded random chart. Exactly seven survivors are
/// required (each with every normalized minor below tol); anything else
/// throws with the observed count.
std::vector<CPoint> seven_points_numeric(const CubicNet& net, double tol = 1e-8, uint64_t seed = 1);

/// Largest normalized |N_i(p)| over the three minors.
double net_residual(const CubicNet& net, const CPoint& p);
double poly_residual(const Poly& f, const CPoint& p);

/// True when no six of the given points lie on a common conic, measured by
/// the smallest relative singular value of the 6x6 conic evaluation matrices.
bool no_six_on_conic(const std::vector<CPoint>& pts, double sv_threshold = 1e-6);

/// Number of solutions of the fiber system over a random target point after
/// the base points are removed (2 for a generic net and target).
int fiber_count(const CubicNet& net, double tol = 1e-8, uint64_t seed = 1);

struct BranchFit {
    std::array<std::complex<double>, 15> quartic;  // quartic monomial order
    double fit_residual;                           // largest held-out evaluation
    double rank_gap;                               // sigma_15/sigma_1 of a 15x15 sample block
};

/// Samples the ramification sextic on random lines, pushes the samples through
/// the net, and fits the unique quartic through the image points. Throws when
/// the held-out residual exceeds tol.
BranchFit branch_quartic(const CubicNet& net, int samples = 30, double tol = 1e-6, uint64_t seed = 1);

}  // namespace lueroth
