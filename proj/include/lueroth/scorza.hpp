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

#include "lueroth/poly.hpp"

namespace lueroth {

/// Fully symmetric 4-tensor F with F(x,x,x,x) = f(x) for a quartic f.
/// Stored as the 15 distinct entries; the accessor symmetrizes indices.
class SymQuarticTensor {
  public:
    /// Entry at indices (i,j,k,l), each in 0..2, any order.
    const Scalar& at(int i, int j, int k, int l) const;
    Scalar& at(int i, int j, int k, int l);

    /// Index of the symmetric class of (i,j,k,l) in the 15-slot storage.
    static int slot(int i, int j, int k, int l);

  private:
    std::array<Scalar, 15> v_{};
};

/// Polarization: F entries are quartic coefficients divided by multinomials.
SymQuarticTensor sym_tensor(const Poly& quartic_in_x);

/// Inverse of sym_tensor.
Poly quartic_from_tensor(const SymQuarticTensor& t);

/// The degree-4 covariant of a plane quartic given by contracting four copies
/// of its symmetric tensor against four epsilon factors, one slot of each copy
/// left free for the variables. scorza_naive runs the full 3^16 index loop and
/// is the oracle; scorza_fast enumerates only the nonzero epsilon patterns
/// (6^4 bracket assignments times 3^4 free indices). Both produce identical
/// exact output.
Poly scorza_naive(const Poly& quartic_in_x);
Poly scorza_fast(const Poly& quartic_in_x);

}  // namespace lueroth
