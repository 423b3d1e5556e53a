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

#include <cstdint>
#include <random>
#include <utility>

#include "lueroth/poly.hpp"

namespace lueroth {

/// Deterministic generator for small-integer test instances. Draws are made
/// with explicit rejection sampling on the raw 64-bit stream, so the output
/// depends only on the seed, not on the standard library's distributions.
class Rng {
  public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    uint64_t next_u64() { return g_(); }
    /// Uniform integer in [lo, hi].
    long range(long lo, long hi);
    /// Uniform nonzero integer in [-m, m].
    long nonzero(long m);

  private:
    std::mt19937_64 g_;
};

/// Homogeneous form with uniform coefficients in [-9, 9].
Poly random_form(Rng& rng, int degree, bool in_e = false);

/// Quadratic form in x with nonzero Gram determinant (resamples, bounded).
Poly random_nondegenerate_conic(Rng& rng);

/// (Q, C) with Q a nondegenerate conic and C a random cubic in x.
std::pair<Poly, Poly> random_bateman_pair(Rng& rng);

/// Random integer matrix with determinant 1 (a product of shears).
Mat3 random_unimodular(Rng& rng);

/// Five lines certified generic (no two proportional, no three concurrent).
std::array<Poly, 5> random_pentagon_lines(Rng& rng);

}  // namespace lueroth
