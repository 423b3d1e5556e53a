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

#include "lueroth/apolarity.hpp"

#include <stdexcept>

namespace lueroth {

namespace {
// Coefficients of a linear form in x as a projective vector.
std::array<Scalar, 3> line_coeffs(const Poly& l) {
    if (!l.is_zero() && !l.is_bihomogeneous(1, 0)) {
        throw std::invalid_argument("expected a linear form in x");
    }
    return {l.coeff(Mono::of({{X1, 1}})), l.coeff(Mono::of({{X2, 1}})), l.coeff(Mono::of({{X3, 1}}))};
}

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
}  // namespace

CatalecticantData catalecticant(const Poly& f) {
    if (!f.is_bihomogeneous(4, 0)) throw std::invalid_argument("catalecticant expects a quartic in x");
    const auto& pairs = conic_monomials(false);
    CatalecticantData data{f, ExactMatrix(6, 6)};
    for (int u = 0; u < 6; ++u) {
        for (int v = u; v < 6; ++v) {
            // Fourth derivative of f along the exponent sum u+v: equals the
            // coefficient of that monomial times the product of factorials.
            Mono s;
            for (int i = 0; i < 3; ++i) s.exp[i] = static_cast<uint8_t>(pairs[u].exp[i] + pairs[v].exp[i]);
            static const long fact[5] = {1, 1, 2, 6, 24};
            long mult = fact[s.exp[0]] * fact[s.exp[1]] * fact[s.exp[2]];
            Scalar entry = f.coeff(s) * Scalar(mult);
            data.lc.at(u, v) = entry;
            data.lc.at(v, u) = entry;
        }
    }
    return data;
}

std::vector<Poly> catalecticant_kernel(const Poly& f) {
    CatalecticantData data = catalecticant(f);
    auto basis = kernel_basis(data.lc);
    const auto& emons = conic_monomials(true);
    std::vector<Poly> out;
    for (const auto& v : basis) {
        Poly q;
        for (int k = 0; k < 6; ++k) q.add_term(emons[k], v[k]);
        out.push_back(std::move(q));
    }
    return out;
}

Poly clebsch_from_lines(const std::array<Poly, 5>& lines) {
    Poly f;
    for (const Poly& l : lines) f += l.pow(4);
    return f;
}

Pentagon pentagon_from_lines(const std::array<Poly, 5>& lines) {
    Pentagon p;
    p.lines = lines;
    std::array<std::array<Scalar, 3>, 5> c;
    for (int i = 0; i < 5; ++i) c[i] = line_coeffs(lines[i]);

    int k = 0;
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            auto v = cross(c[i], c[j]);
            if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) ok = false;  // proportional lines
            p.vertices[k++] = v;
        }
    }
    // No three concurrent: every 3x3 determinant of coefficient triples nonzero.
    for (int i = 0; i < 5 && ok; ++i) {
        for (int j = i + 1; j < 5 && ok; ++j) {
            for (int l = j + 1; l < 5 && ok; ++l) {
                Mat3 m{{{c[i][0], c[i][1], c[i][2]},
                        {c[j][0], c[j][1], c[j][2]},
                        {c[l][0], c[l][1], c[l][2]}}};
                if (det3(m).is_zero()) ok = false;
            }
        }
    }
    p.generic = ok;
    return p;
}

std::vector<Poly> lueroth_space_from_pentagon(const Pentagon& p) {
    if (!p.generic) {
        throw std::invalid_argument("degenerate pentagon: three lines concurrent or two proportional");
    }
    const auto& qmons = quartic_monomials();
    ExactMatrix ev(10, 15);
    for (int r = 0; r < 10; ++r) {
        const auto& v = p.vertices[r];
        for (int cidx = 0; cidx < 15; ++cidx) {
            const Mono& m = qmons[cidx];
            Scalar val(1);
            for (int i = 0; i < 3; ++i) {
                for (int k = 0; k < m.exp[i]; ++k) val *= v[i];
            }
            ev.at(r, cidx) = val;
        }
    }
    auto basis = kernel_basis(ev);
    std::vector<Poly> out;
    for (const auto& vec : basis) {
        Poly q;
        for (int k = 0; k < 15; ++k) q.add_term(qmons[k], vec[k]);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace lueroth
