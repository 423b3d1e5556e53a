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

#include "lueroth/json_io.hpp"

#include <stdexcept>

namespace lueroth {

json field_to_json(long d) {
    if (d == 0) return json{{"kind", "Q"}};
    return json{{"kind", "Qsqrt"}, {"d", d}};
}

long field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return 0;
    if (kind == "Qsqrt") {
        long d = j.at("d").get<long>();
        if (!valid_extension(d)) throw std::invalid_argument("invalid extension discriminant in field");
        return d;
    }
    throw std::invalid_argument("unknown field kind: " + kind);
}

json scalar_to_json(const Scalar& s, long field_d) {
    if (field_d == 0) {
        if (!s.is_rational()) throw std::invalid_argument("extension scalar in a rational context");
        return s.rat_part().get_str();
    }
    return json::array({s.rat_part().get_str(), s.t_part().get_str()});
}

Scalar scalar_from_json(const json& j, long field_d) {
    if (j.is_string()) return Scalar::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_array() && j.size() == 2) {
        if (field_d == 0) throw std::invalid_argument("two-part coefficient needs a Qsqrt field");
        mpq_class a, b;
        if (a.set_str(j[0].get<std::string>(), 10) != 0 || b.set_str(j[1].get<std::string>(), 10) != 0) {
            throw std::invalid_argument("bad coefficient literal");
        }
        a.canonicalize();
        b.canonicalize();
        return Scalar(a, b, field_d);
    }
    throw std::invalid_argument("bad coefficient encoding");
}

json poly_to_json(const Poly& p) {
    long d = p.field_d();
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["coeff"] = scalar_to_json(c, d);
        t["xexp"] = {m.exp[0], m.exp[1], m.exp[2]};
        t["eexp"] = {m.exp[3], m.exp[4], m.exp[5]};
        terms.push_back(std::move(t));
    }
    return json{{"field", field_to_json(d)}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j) {
    long d = field_from_json(j.at("field"));
    Poly p;
    for (const auto& t : j.at("terms")) {
        Mono m;
        const auto& xe = t.at("xexp");
        const auto& ee = t.at("eexp");
        if (xe.size() != 3 || ee.size() != 3) throw std::invalid_argument("exponent vectors must have 3 entries");
        for (int i = 0; i < 3; ++i) {
            m.exp[i] = xe[i].get<uint8_t>();
            m.exp[3 + i] = ee[i].get<uint8_t>();
        }
        p.add_term(m, scalar_from_json(t.at("coeff"), d));
    }
    return p;
}

json matrix_to_json(const ExactMatrix& m) {
    long d = 0;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) d = join_fields(d, m.at(i, j).ext_d());
    }
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j), d));
        rows.push_back(std::move(row));
    }
    return json{{"field", field_to_json(d)}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const json& j) {
    long d = field_from_json(j.at("field"));
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("row count mismatch");
    ExactMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw std::invalid_argument("column count mismatch");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(entries[i][c], d);
    }
    return m;
}

json tuple_to_json(const BatemanTuple& t) {
    long d = 0;
    for (int i = 0; i < 3; ++i) {
        for (int a = 0; a < 3; ++a) {
            for (int b = a; b < 3; ++b) d = join_fields(d, t.d(i, a, b).ext_d());
        }
    }
    json j;
    j["field"] = field_to_json(d);
    j["projected"] = t.projected();
    for (int i = 0; i < 3; ++i) {
        for (int a = 0; a < 3; ++a) {
            for (int b = a; b < 3; ++b) {
                std::string key = "d_" + std::to_string(i + 1) + "_" + std::to_string(a + 1) + std::to_string(b + 1);
                j[key] = scalar_to_json(t.d(i, a, b), d);
            }
        }
    }
    return j;
}

BatemanTuple tuple_from_json(const json& j) {
    long d = field_from_json(j.at("field"));
    BatemanTuple t;
    for (int i = 0; i < 3; ++i) {
        for (int a = 0; a < 3; ++a) {
            for (int b = a; b < 3; ++b) {
                std::string key = "d_" + std::to_string(i + 1) + "_" + std::to_string(a + 1) + std::to_string(b + 1);
                t.d(i, a, b) = scalar_from_json(j.at(key), d);
            }
        }
    }
    t.mark_projected(j.value("projected", false));
    return t;
}

}  // namespace lueroth
