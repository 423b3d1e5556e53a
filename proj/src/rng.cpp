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

#include "lueroth/rng.hpp"

#include <stdexcept>

#include "lueroth/apolarity.hpp"

namespace lueroth {

long Rng::range(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t r;
    do {
        r = g_();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
}

long Rng::nonzero(long m) {
    long v;
    do {
        v = range(-m, m);
    } while (v == 0);
    return v;
}

Poly random_form(Rng& rng, int degree, bool in_e) {
    Poly f;
    for (int a = 0; a <= degree; ++a) {
        for (int b = 0; a + b <= degree; ++b) {
            int c = degree - a - b;
            Mono m;
            m.exp[in_e ? 3 : 0] = static_cast<uint8_t>(a);
            m.exp[in_e ? 4 : 1] = static_cast<uint8_t>(b);
            m.exp[in_e ? 5 : 2] = static_cast<uint8_t>(c);
            f.add_term(m, Scalar(rng.range(-9, 9)));
        }
    }
    return f;
}

Poly random_nondegenerate_conic(Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        Poly q = random_form(rng, 2, false);
        if (!det3(gram_of_conic(q, false)).is_zero()) return q;
    }
    throw std::runtime_error("failed to sample a nondegenerate conic");
}

std::pair<Poly, Poly> random_bateman_pair(Rng& rng) {
    Poly q = random_nondegenerate_conic(rng);
    Poly c;
    do {
        c = random_form(rng, 3, false);
    } while (c.is_zero());
    return {q, c};
}

Mat3 random_unimodular(Rng& rng) {
    Mat3 m{{{Scalar(1), Scalar(0), Scalar(0)},
            {Scalar(0), Scalar(1), Scalar(0)},
            {Scalar(0), Scalar(0), Scalar(1)}}};
    int shears = static_cast<int>(rng.range(3, 5));
    for (int s = 0; s < shears; ++s) {
        int i = static_cast<int>(rng.range(0, 2));
        int j = static_cast<int>(rng.range(0, 2));
        if (i == j) j = (j + 1) % 3;
        Scalar k(rng.nonzero(2));
        // left-multiply by the elementary shear E_{ij}(k)
        for (int col = 0; col < 3; ++col) m[i][col] += k * m[j][col];
    }
    return m;
}

std::array<Poly, 5> random_pentagon_lines(Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        std::array<Poly, 5> lines;
        for (auto& l : lines) {
            l = Poly::linear_form({Scalar(rng.range(-9, 9)), Scalar(rng.range(-9, 9)), Scalar(rng.range(-9, 9))});
        }
        if (pentagon_from_lines(lines).generic) return lines;
    }
    throw std::runtime_error("failed to sample a generic pentagon");
}

}  // namespace lueroth
