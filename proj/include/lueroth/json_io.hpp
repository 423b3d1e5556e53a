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

#include <json.hpp>

#include "lueroth/bateman.hpp"
#include "lueroth/linalg.hpp"
#include "lueroth/poly.hpp"

namespace lueroth {

using json = nlohmann::json;

/// Field descriptor: {"kind":"Q"} or {"kind":"Qsqrt","d":-2}.
json field_to_json(long d);
long field_from_json(const json& j);

/// Coefficient: exact fraction string, or [rational-part, t-part] in an
/// extension field.
json scalar_to_json(const Scalar& s, long field_d);
Scalar scalar_from_json(const json& j, long field_d);

/// {"field":..., "terms":[{"coeff":..., "xexp":[..], "eexp":[..]}, ...]}
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// {"field":..., "rows":r, "cols":c, "entries":[[...], ...]}
json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

/// {"field":..., "projected":..., "d_1_11":..., ..., "d_3_33":...}
json tuple_to_json(const BatemanTuple& t);
BatemanTuple tuple_from_json(const json& j);

}  // namespace lueroth
