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

#include "lueroth/repcheck.hpp"

#include <stdexcept>

namespace lueroth {

const std::array<long, 5> kS4ClassSizes = {1, 6, 3, 8, 6};

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    ClassFunction r;
    for (int i = 0; i < 5; ++i) r.v[i] = v[i] + o.v[i];
    return r;
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
    ClassFunction r;
    for (int i = 0; i < 5; ++i) r.v[i] = v[i] * o.v[i];
    return r;
}

const std::array<ClassFunction, 5>& s4_irreducible_characters() {
    static const std::array<ClassFunction, 5> chars = {{
        {{1, 1, 1, 1, 1}},     // trivial
        {{1, -1, 1, 1, -1}},   // sign
        {{2, 0, 2, -1, 0}},    // 2-dimensional
        {{3, 1, -1, 0, -1}},   // permutation-derived 3-dimensional
        {{3, -1, -1, 0, 1}},   // its sign twist
    }};
    return chars;
}

const std::array<std::string, 5>& s4_irreducible_names() {
    static const std::array<std::string, 5> names = {"1", "eps", "V2", "V3", "V3'"};
    return names;
}

std::array<Mat3, 5> s4_matrices() {
    auto M = [](long a, long b, long c, long d, long e, long f, long g, long h, long i) {
        return Mat3{{{Scalar(a), Scalar(b), Scalar(c)},
                     {Scalar(d), Scalar(e), Scalar(f)},
                     {Scalar(g), Scalar(h), Scalar(i)}}};
    };
    // Representatives permute the four frame points projectively; each has
    // determinant one (sign factors chosen to fix it, never cube roots).
    Mat3 id = M(1, 0, 0, 0, 1, 0, 0, 0, 1);
    Mat3 swap12 = M(0, -1, 0, -1, 0, 0, 0, 0, -1);          // -P(12)
    Mat3 double12_34 = M(0, 1, -1, 1, 0, -1, 0, 0, -1);     // p1<->p2, p3<->p4
    Mat3 cycle123 = M(0, 0, 1, 1, 0, 0, 0, 1, 0);           // p1->p2->p3->p1
    Mat3 cycle1234 = M(0, 0, 1, -1, 0, 1, 0, -1, 1);        // -(p1->p2->p3->p4->p1)
    return {id, swap12, double12_34, cycle123, cycle1234};
}

namespace {
mpq_class trace3(const Mat3& m) {
    Scalar t = m[0][0] + m[1][1] + m[2][2];
    if (!t.is_rational()) throw std::logic_error("non-rational trace");
    return t.rat_part();
}
}  // namespace

ClassFunction character_of(const std::array<Mat3, 5>& reps) {
    ClassFunction chi;
    for (int i = 0; i < 5; ++i) chi.v[i] = trace3(reps[i]);
    return chi;
}

ClassFunction sym2_of(const ClassFunction& chi_g, const ClassFunction& chi_g2) {
    ClassFunction r;
    for (int i = 0; i < 5; ++i) r.v[i] = (chi_g.v[i] * chi_g.v[i] + chi_g2.v[i]) / 2;
    return r;
}

ClassFunction lambda2_of(const ClassFunction& chi_g, const ClassFunction& chi_g2) {
    ClassFunction r;
    for (int i = 0; i < 5; ++i) r.v[i] = (chi_g.v[i] * chi_g.v[i] - chi_g2.v[i]) / 2;
    return r;
}

namespace {
ClassFunction character_of_power(const std::array<Mat3, 5>& reps, int power) {
    ClassFunction chi;
    for (int i = 0; i < 5; ++i) {
        Mat3 m = reps[i];
        for (int p = 1; p < power; ++p) m = mat3_mul(m, reps[i]);
        chi.v[i] = trace3(m);
    }
    return chi;
}
}  // namespace

ClassFunction sym2_character(const std::array<Mat3, 5>& reps) {
    return sym2_of(character_of(reps), character_of_power(reps, 2));
}

ClassFunction lambda2_character(const std::array<Mat3, 5>& reps) {
    return lambda2_of(character_of(reps), character_of_power(reps, 2));
}

std::array<long, 5> decompose_s4(const ClassFunction& chi) {
    const auto& irr = s4_irreducible_characters();
    std::array<long, 5> mult{};
    for (int k = 0; k < 5; ++k) {
        mpq_class inner = 0;
        for (int i = 0; i < 5; ++i) inner += mpq_class(kS4ClassSizes[i]) * chi.v[i] * irr[k].v[i];
        inner /= 24;
        if (inner.get_den() != 1 || inner < 0) {
            throw std::domain_error("class function is not a character (multiplicity " + inner.get_str() +
                                    " for " + s4_irreducible_names()[k] + ")");
        }
        mult[k] = static_cast<long>(inner.get_num().get_si());
    }
    return mult;
}

long s4_dimension(const std::array<long, 5>& mult) {
    static const long dims[5] = {1, 1, 2, 3, 3};
    long d = 0;
    for (int i = 0; i < 5; ++i) d += mult[i] * dims[i];
    return d;
}

bool WeightMultiset::negation_symmetric() const {
    for (const auto& [w, m] : mult) {
        auto it = mult.find(-w);
        if (it == mult.end() || it->second != m) return false;
    }
    return true;
}

long WeightMultiset::total() const {
    long t = 0;
    for (const auto& [w, m] : mult) {
        (void)w;
        t += m;
    }
    return t;
}

WeightMultiset WeightMultiset::irreducible(int n) {
    WeightMultiset ws;
    for (int w = -n; w <= n; w += 2) ws.mult[w] = 1;
    return ws;
}

WeightMultiset sym_power(int k, const WeightMultiset& base) {
    if (k < 0) throw std::invalid_argument("negative symmetric power");
    // dp over the expanded weight list: choose a multiset of size k
    std::vector<int> weights;
    for (const auto& [w, m] : base.mult) {
        if (m < 0) throw std::invalid_argument("negative multiplicity in weight multiset");
        for (long i = 0; i < m; ++i) weights.push_back(w);
    }
    // multisets[j] maps weight-sum -> count, using at most the first t weights,
    // with repetition allowed per weight
    std::vector<std::map<int, long>> dp(k + 1);
    dp[0][0] = 1;
    for (int w : weights) {
        // allow any number of copies of w: process like a coin-change step
        for (int j = 1; j <= k; ++j) {
            for (const auto& [s, c] : dp[j - 1]) dp[j][s + w] += c;
        }
        // note: iterating dp[j-1] after it already absorbed w allows repeats
    }
    WeightMultiset out;
    out.mult = dp[k];
    return out;
}

std::vector<std::pair<int, long>> sl2_plethysm(int k, const WeightMultiset& base) {
    if (!base.negation_symmetric()) throw std::invalid_argument("weight multiset is not negation-symmetric");
    WeightMultiset w = sym_power(k, base);
    std::vector<std::pair<int, long>> out;
    while (!w.mult.empty()) {
        // erase zero entries, then peel from the top weight
        for (auto it = w.mult.begin(); it != w.mult.end();) {
            if (it->second == 0) {
                it = w.mult.erase(it);
            } else {
                ++it;
            }
        }
        if (w.mult.empty()) break;
        int top = w.mult.rbegin()->first;
        long m = w.mult.rbegin()->second;
        if (top < 0 || m < 0) throw std::domain_error("weight multiset is not a representation");
        for (int v = -top; v <= top; v += 2) {
            w.mult[v] -= m;
            if (w.mult[v] < 0) throw std::domain_error("weight multiset is not a representation");
        }
        out.emplace_back(top, m);
    }
    return out;
}

}  // namespace lueroth
