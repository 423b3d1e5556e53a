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

#include "lueroth/scorza.hpp"

#include <algorithm>
#include <stdexcept>

namespace lueroth {

namespace {
// Monomial exponent of a sorted index 4-tuple.
Mono mono_of_indices(int i, int j, int k, int l) {
    Mono m;
    m.exp[i]++;
    m.exp[j]++;
    m.exp[k]++;
    m.exp[l]++;
    return m;
}

long multinomial4(const Mono& m) {
    static const long fact[5] = {1, 1, 2, 6, 24};
    return 24 / (fact[m.exp[0]] * fact[m.exp[1]] * fact[m.exp[2]]);
}

int eps(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    // parity of the permutation (a,b,c) of (0,1,2)
    return ((b - a) * (c - b) * (c - a) > 0) ? 1 : -1;
}
}  // namespace

int SymQuarticTensor::slot(int i, int j, int k, int l) {
    int s[4] = {i, j, k, l};
    std::sort(s, s + 4);
    // rank of the sorted tuple among the 15 weakly increasing 4-tuples over {0,1,2}
    int idx = 0;
    int prev = 0;
    for (int pos = 0; pos < 4; ++pos) {
        for (int v = prev; v < s[pos]; ++v) {
            // count tuples with this prefix followed by values >= v
            int remaining = 4 - pos - 1;
            int choices = 3 - v;  // values v..2
            // C(remaining + choices - 1, remaining)
            int c = 1;
            for (int t = 1; t <= remaining; ++t) c = c * (choices - 1 + t) / t;
            idx += c;
        }
        prev = s[pos];
    }
    return idx;
}

const Scalar& SymQuarticTensor::at(int i, int j, int k, int l) const { return v_[slot(i, j, k, l)]; }
Scalar& SymQuarticTensor::at(int i, int j, int k, int l) { return v_[slot(i, j, k, l)]; }

SymQuarticTensor sym_tensor(const Poly& f) {
    if (!f.is_bihomogeneous(4, 0)) throw std::invalid_argument("sym_tensor expects a quartic in x");
    SymQuarticTensor t;
    for (const auto& [m, c] : f.terms()) {
        int idx[4];
        int pos = 0;
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < m.exp[i]; ++k) idx[pos++] = i;
        }
        t.at(idx[0], idx[1], idx[2], idx[3]) = c / Scalar(multinomial4(m));
    }
    return t;
}

Poly quartic_from_tensor(const SymQuarticTensor& t) {
    Poly f;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            for (int k = j; k < 3; ++k) {
                for (int l = k; l < 3; ++l) {
                    Mono m = mono_of_indices(i, j, k, l);
                    f.add_term(m, t.at(i, j, k, l) * Scalar(multinomial4(m)));
                }
            }
        }
    }
    return f;
}

Poly scorza_naive(const Poly& f) {
    SymQuarticTensor F = sym_tensor(f);
    Poly result;
    // Four tensor copies A,B,C,D; bracket factors (ABC)(ABD)(ACD)(BCD) consume
    // three slots of each copy, the fourth slot carries the variable.
    for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
    for (int c1 = 0; c1 < 3; ++c1) {
        int s1 = eps(a1, b1, c1);
        if (s1 == 0) continue;
        for (int a2 = 0; a2 < 3; ++a2)
        for (int b2 = 0; b2 < 3; ++b2)
        for (int d1 = 0; d1 < 3; ++d1) {
            int s2 = eps(a2, b2, d1);
            if (s2 == 0) continue;
            for (int a3 = 0; a3 < 3; ++a3)
            for (int c2 = 0; c2 < 3; ++c2)
            for (int d2 = 0; d2 < 3; ++d2) {
                int s3 = eps(a3, c2, d2);
                if (s3 == 0) continue;
                for (int b3 = 0; b3 < 3; ++b3)
                for (int c3 = 0; c3 < 3; ++c3)
                for (int d3 = 0; d3 < 3; ++d3) {
                    int s4 = eps(b3, c3, d3);
                    if (s4 == 0) continue;
                    int sign = s1 * s2 * s3 * s4;
                    for (int a4 = 0; a4 < 3; ++a4)
                    for (int b4 = 0; b4 < 3; ++b4)
                    for (int c4 = 0; c4 < 3; ++c4)
                    for (int d4 = 0; d4 < 3; ++d4) {
                        Scalar term = F.at(a1, a2, a3, a4) * F.at(b1, b2, b3, b4) *
                                      F.at(c1, c2, c3, c4) * F.at(d1, d2, d3, d4);
                        if (term.is_zero()) continue;
                        result += Poly::term(mono_of_indices(a4, b4, c4, d4),
                                             sign > 0 ? term : -term);
                    }
                }
            }
        }
    }
    return result;
}

Poly scorza_fast(const Poly& f) {
    SymQuarticTensor F = sym_tensor(f);
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    static const int psign[6] = {1, 1, 1, -1, -1, -1};

    std::array<Scalar, 15> acc{};
    for (int p1 = 0; p1 < 6; ++p1) {
        int a1 = perms[p1][0], b1 = perms[p1][1], c1 = perms[p1][2];
        for (int p2 = 0; p2 < 6; ++p2) {
            int a2 = perms[p2][0], b2 = perms[p2][1], d1 = perms[p2][2];
            for (int p3 = 0; p3 < 6; ++p3) {
                int a3 = perms[p3][0], c2 = perms[p3][1], d2 = perms[p3][2];
                for (int p4 = 0; p4 < 6; ++p4) {
                    int b3 = perms[p4][0], c3 = perms[p4][1], d3 = perms[p4][2];
                    int sign = psign[p1] * psign[p2] * psign[p3] * psign[p4];
                    for (int a4 = 0; a4 < 3; ++a4) {
                        Scalar fa = F.at(a1, a2, a3, a4);
                        if (fa.is_zero()) continue;
                        for (int b4 = 0; b4 < 3; ++b4) {
                            Scalar fb = fa * F.at(b1, b2, b3, b4);
                            if (fb.is_zero()) continue;
                            for (int c4 = 0; c4 < 3; ++c4) {
                                Scalar fc = fb * F.at(c1, c2, c3, c4);
                                if (fc.is_zero()) continue;
                                for (int d4 = 0; d4 < 3; ++d4) {
                                    Scalar fd = fc * F.at(d1, d2, d3, d4);
                                    if (fd.is_zero()) continue;
                                    int s = SymQuarticTensor::slot(a4, b4, c4, d4);
                                    acc[s] += sign > 0 ? fd : -fd;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    Poly result;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            for (int k = j; k < 3; ++k) {
                for (int l = k; l < 3; ++l) {
                    result.add_term(mono_of_indices(i, j, k, l), acc[SymQuarticTensor::slot(i, j, k, l)]);
                }
            }
        }
    }
    return result;
}

}  // namespace lueroth
