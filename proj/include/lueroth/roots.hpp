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
#include <vector>

namespace lueroth {

using cdouble = std::complex<double>;

/// All complex roots of c[0] + c[1] z + ... + c[n] z^n by Aberth-Ehrlich
/// iteration with Newton polish. Residuals on the monic normalization are
/// kept below 1e-10 (checked; throws on non-convergence). Exact zero roots
/// from vanishing trailing coefficients are returned as exact zeros.
std::vector<cdouble> poly_roots(std::vector<cdouble> coeffs);

/// Horner evaluation.
cdouble poly_eval(const std::vector<cdouble>& coeffs, cdouble z);

}  // namespace lueroth
