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

#include "lueroth/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace lueroth {

cdouble poly_eval(const std::vector<cdouble>& c, cdouble z) {
    cdouble v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
    return v;
}

namespace {
cdouble poly_eval_deriv(const std::vector<cdouble>& c, cdouble z) {
    cdouble v = 0.0;
    for (size_t i = c.size(); i-- > 1;) v = v * z + c[i] * static_cast<double>(i);
    return v;
}
}  // namespace

std::vector<cdouble> poly_roots(std::vector<cdouble> c) {
    double scale = 0.0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) throw std::invalid_argument("zero polynomial has no finite root set");
    while (!c.empty() && std::abs(c.back()) < 1e-14 * scale) c.pop_back();
    if (c.size() <= 1) return {};

    std::vector<cdouble> roots;
    size_t zero_roots = 0;
    while (zero_roots + 1 < c.size() && std::abs(c[zero_roots]) < 1e-300) ++zero_roots;
    for (size_t i = 0; i < zero_roots; ++i) roots.emplace_back(0.0, 0.0);
    if (zero_roots > 0) c.erase(c.begin(), c.begin() + static_cast<long>(zero_roots));

    size_t n = c.size() - 1;
    if (n == 0) return roots;

    // monic normalization
    cdouble lead = c.back();
    for (auto& v : c) v /= lead;

    // Cauchy bound initial ring
    double r = 0.0;
    for (size_t i = 0; i < n; ++i) r = std::max(r, std::abs(c[i]));
    r = 1.0 + r;
    std::vector<cdouble> z(n);
    for (size_t i = 0; i < n; ++i) {
        double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n) + 0.4;
        z[i] = std::polar(0.5 + 0.7 * r, theta);
    }

    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (size_t i = 0; i < n; ++i) {
            cdouble p = poly_eval(c, z[i]);
            cdouble dp = poly_eval_deriv(c, z[i]);
            if (std::abs(dp) == 0.0) {
                z[i] += cdouble(1e-8, 1e-8);
                max_step = 1.0;
                continue;
            }
            cdouble w = p / dp;
            cdouble sum = 0.0;
            for (size_t j = 0; j < n; ++j) {
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            }
            cdouble step = w / (1.0 - w * sum);
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (max_step < 1e-15) break;
    }

    // Newton polish and residual gate
    for (size_t i = 0; i < n; ++i) {
        for (int k = 0; k < 3; ++k) {
            cdouble p = poly_eval(c, z[i]);
            cdouble dp = poly_eval_deriv(c, z[i]);
            if (std::abs(dp) == 0.0) break;
            z[i] -= p / dp;
        }
        double bound = std::max(1.0, std::abs(z[i]));
        double growth = 1.0;
        for (size_t k = 0; k < n; ++k) growth *= bound;
        if (std::abs(poly_eval(c, z[i])) > 1e-10 * growth) {
            throw std::runtime_error("root finder did not converge to requested residual");
        }
        roots.push_back(z[i]);
    }
    return roots;
}

}  // namespace lueroth
