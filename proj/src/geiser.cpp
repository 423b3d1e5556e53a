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

#include "lueroth/geiser.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Dense>

#include "lueroth/roots.hpp"
#include "lueroth/rng.hpp"

namespace lueroth {

CubicNet net_from_QC(const Poly& Q, const Poly& C) {
    SyzygyMatrix m = syzygy_from_QC(Q, C);
    CubicNet net;
    net.Q = Q;
    net.C = C;
    // minor with column i deleted, unsigned
    net.minors[0] = m.lin[1] * m.quad[2] - m.lin[2] * m.quad[1];
    net.minors[1] = m.lin[0] * m.quad[2] - m.lin[2] * m.quad[0];
    net.minors[2] = m.lin[0] * m.quad[1] - m.lin[1] * m.quad[0];
    net.degenerate = net.minors[0].is_zero() || net.minors[1].is_zero() || net.minors[2].is_zero();
    return net;
}

Poly ramification_sextic(const CubicNet& net) {
    std::array<std::array<Poly, 3>, 3> J;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) J[i][j] = net.minors[i].diff(x_var(j));
    }
    return J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
           J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
           J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
}

// ---- numeric helpers --------------------------------------------------------

namespace {

cdouble eval_c(const Poly& f, const CPoint& p) {
    cdouble s = 0.0;
    for (const auto& [m, c] : f.terms()) {
        cdouble t = c.to_complex();
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < m.exp[i]; ++k) t *= p[i];
        }
        s += t;
    }
    return s;
}

double coeff_scale(const Poly& f) {
    double s = 0.0;
    for (const auto& [m, c] : f.terms()) {
        (void)m;
        s = std::max(s, std::abs(c.to_complex()));
    }
    return s == 0.0 ? 1.0 : s;
}

CPoint normalized(const CPoint& p) {
    double n = std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
    if (n == 0.0) return p;
    return {p[0] / n, p[1] / n, p[2] / n};
}

// scale-invariant distance: norm of the cross product of normalized vectors
double proj_dist(const CPoint& a, const CPoint& b) {
    CPoint u = normalized(a), v = normalized(b);
    cdouble c0 = u[1] * v[2] - u[2] * v[1];
    cdouble c1 = u[2] * v[0] - u[0] * v[2];
    cdouble c2 = u[0] * v[1] - u[1] * v[0];
    return std::sqrt(std::norm(c0) + std::norm(c1) + std::norm(c2));
}

Poly dehomogenize(const Poly& f) {
    return f.subst_x({Poly::var(X1), Poly::var(X2), Poly::constant(Scalar(1))});
}

int x2_degree(const Poly& f) {
    int d = -1;
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        d = std::max(d, static_cast<int>(m.exp[1]));
    }
    return d;
}

// coefficient of x2^j as a polynomial in x1 only
Poly x2_coefficient(const Poly& f, int j) {
    Poly out;
    for (const auto& [m, c] : f.terms()) {
        if (m.exp[1] != j) continue;
        Mono r;
        r.exp[0] = m.exp[0];
        out.add_term(r, c);
    }
    return out;
}

Poly det_poly(std::vector<std::vector<Poly>>& m, std::vector<int>& cols, int row) {
    if (cols.empty()) return Poly::constant(Scalar(1));
    Poly total;
    int sign = 1;
    for (size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (!m[row][c].is_zero()) {
            std::vector<int> rest;
            for (size_t t = 0; t < cols.size(); ++t) {
                if (t != k) rest.push_back(cols[t]);
            }
            Poly sub = det_poly(m, rest, row + 1);
            Poly term = m[row][c] * sub;
            total += sign > 0 ? term : -term;
        }
        sign = -sign;
    }
    return total;
}

// Sylvester resultant of f, g with respect to x2; entries are polys in x1.
Poly resultant_x2(const Poly& f, const Poly& g) {
    int df = x2_degree(f), dg = x2_degree(g);
    if (df < 1 || dg < 1) throw std::runtime_error("degenerate chart for resultant");
    int n = df + dg;
    std::vector<std::vector<Poly>> s(n, std::vector<Poly>(n));
    for (int r = 0; r < dg; ++r) {
        for (int j = 0; j <= df; ++j) s[r][r + j] = x2_coefficient(f, df - j);
    }
    for (int r = 0; r < df; ++r) {
        for (int j = 0; j <= dg; ++j) s[dg + r][r + j] = x2_coefficient(g, dg - j);
    }
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return det_poly(s, cols, 0);
}

std::vector<cdouble> univariate_coeffs(const Poly& f) {
    int d = 0;
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        d = std::max(d, static_cast<int>(m.exp[0]));
    }
    std::vector<cdouble> out(d + 1, 0.0);
    for (const auto& [m, c] : f.terms()) out[m.exp[0]] = c.to_complex();
    return out;
}

// univariate in x2 obtained from a chart poly by substituting x1 = a
std::vector<cdouble> restrict_x1(const Poly& f, cdouble a) {
    int d = x2_degree(f);
    std::vector<cdouble> out(std::max(d, 0) + 1, 0.0);
    for (const auto& [m, c] : f.terms()) {
        cdouble t = c.to_complex();
        for (int k = 0; k < m.exp[0]; ++k) t *= a;
        out[m.exp[1]] += t;
    }
    return out;
}

// Newton polish of a simultaneous zero of two chart polynomials.
void newton_polish2(const Poly& f, const Poly& g, cdouble& a, cdouble& b) {
    Poly fx = f.diff(X1), fy = f.diff(X2), gx = g.diff(X1), gy = g.diff(X2);
    for (int it = 0; it < 8; ++it) {
        CPoint p = {a, b, 1.0};
        cdouble F = eval_c(f, p), G = eval_c(g, p);
        cdouble j11 = eval_c(fx, p), j12 = eval_c(fy, p);
        cdouble j21 = eval_c(gx, p), j22 = eval_c(gy, p);
        cdouble det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-300) return;
        cdouble da = (F * j22 - G * j12) / det;
        cdouble db = (G * j11 - F * j21) / det;
        a -= da;
        b -= db;
        if (std::abs(da) + std::abs(db) < 1e-15 * (1.0 + std::abs(a) + std::abs(b))) break;
    }
}

// All common projective zeros of two curves, via a seeded random chart.
std::vector<CPoint> common_zeros(const Poly& f, const Poly& g, uint64_t seed) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::string last_err = "no attempt";
    for (int attempt = 0; attempt < 8; ++attempt) {
        Mat3 u = random_unimodular(rng);
        Poly fc = dehomogenize(compose_linear_x(f, u));
        Poly gc = dehomogenize(compose_linear_x(g, u));
        try {
            Poly res = resultant_x2(fc, gc);
            if (res.is_zero()) throw std::runtime_error("identically zero resultant (shared component?)");
            std::vector<cdouble> rc = univariate_coeffs(res);
            std::vector<CPoint> found;
            double fscale = coeff_scale(fc), gscale = coeff_scale(gc);
            for (cdouble a : poly_roots(rc)) {
                for (cdouble b : poly_roots(restrict_x1(fc, a))) {
                    cdouble aa = a, bb = b;
                    newton_polish2(fc, gc, aa, bb);
                    CPoint y = {aa, bb, 1.0};
                    double denom = std::pow(std::max({std::abs(aa), std::abs(bb), 1.0}), 3);
                    if (std::abs(eval_c(fc, y)) > 1e-9 * fscale * denom) continue;
                    if (std::abs(eval_c(gc, y)) > 1e-9 * gscale * denom) continue;
                    // map back to the original coordinates: x = U y
                    CPoint p = {0.0, 0.0, 0.0};
                    for (int i = 0; i < 3; ++i) {
                        for (int j = 0; j < 3; ++j) p[i] += u[i][j].to_complex() * y[j];
                    }
                    p = normalized(p);
                    bool dup = false;
                    for (const auto& q : found) {
                        if (proj_dist(p, q) < 1e-6) {
                            dup = true;
                            break;
                        }
                    }
                    if (!dup) found.push_back(p);
                }
            }
            return found;
        } catch (const std::exception& e) {
            last_err = e.what();
        }
    }
    throw std::runtime_error(std::string("intersection failed in every chart: ") + last_err);
}

}  // namespace

double poly_residual(const Poly& f, const CPoint& p) {
    return std::abs(eval_c(f, normalized(p))) / coeff_scale(f);
}

double net_residual(const CubicNet& net, const CPoint& p) {
    double r = 0.0;
    for (const auto& n : net.minors) r = std::max(r, poly_residual(n, p));
    return r;
}

std::vector<CPoint> seven_points_numeric(const CubicNet& net, double tol, uint64_t seed) {
    if (net.degenerate) throw std::invalid_argument("degenerate net");
    // an unlucky chart can push a rational base point to infinity; retry a few
    size_t last = 0;
    for (int attempt = 0; attempt < 5; ++attempt) {
        auto zeros = common_zeros(net.minors[0], net.minors[1], seed + 1000 * attempt);
        std::vector<CPoint> base;
        for (const auto& p : zeros) {
            if (poly_residual(net.minors[2], p) < tol) base.push_back(p);
        }
        if (base.size() == 7) return base;
        last = base.size();
    }
    throw std::runtime_error("expected 7 base points, found " + std::to_string(last));
}

bool no_six_on_conic(const std::vector<CPoint>& pts, double sv_threshold) {
    if (pts.size() != 7) throw std::invalid_argument("expected 7 points");
    const auto& mons = conic_monomials(false);
    for (size_t skip = 0; skip < 7; ++skip) {
        Eigen::MatrixXcd m(6, 6);
        int r = 0;
        for (size_t i = 0; i < 7; ++i) {
            if (i == skip) continue;
            CPoint p = normalized(pts[i]);
            for (int c = 0; c < 6; ++c) {
                cdouble v = 1.0;
                for (int k = 0; k < 3; ++k) {
                    for (int t = 0; t < mons[c].exp[k]; ++t) v *= p[k];
                }
                m(r, c) = v;
            }
            ++r;
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        double smin = svd.singularValues()(5), smax = svd.singularValues()(0);
        if (smin < sv_threshold * smax) return false;
    }
    return true;
}

int fiber_count(const CubicNet& net, double tol, uint64_t seed) {
    Rng rng(seed * 0xd1342543de82ef95ULL + 17);
    std::array<Scalar, 3> y = {Scalar(rng.nonzero(9)), Scalar(rng.range(-9, 9)), Scalar(rng.range(-9, 9))};
    Poly g1 = net.minors[0] * y[1] - net.minors[1] * y[0];
    Poly g2 = net.minors[0] * y[2] - net.minors[2] * y[0];
    auto base = seven_points_numeric(net, tol, seed + 2);
    std::vector<CPoint> zeros;
    for (int attempt = 0; attempt < 5; ++attempt) {
        zeros = common_zeros(g1, g2, seed + 1 + 1000 * attempt);
        if (zeros.size() == base.size() + 2) break;  // generic count for two cubics
    }
    int count = 0;
    for (const auto& z : zeros) {
        double dmin = 1e9;
        for (const auto& b : base) dmin = std::min(dmin, proj_dist(z, b));
        if (dmin > 1e-4) ++count;
    }
    return count;
}

BranchFit branch_quartic(const CubicNet& net, int samples, double tol, uint64_t seed) {
    if (samples < 20) throw std::invalid_argument("need at least 20 samples");
    const int holdout = 10;
    Poly sextic = ramification_sextic(net);
    Rng rng(seed ^ 0xabcdef1234567890ULL);

    std::vector<CPoint> images;
    int guard = 0;
    while (static_cast<int>(images.size()) < samples + holdout && guard++ < 50) {
        // a random rational line, intersected with the sextic
        CPoint A = {cdouble(double(rng.nonzero(9))), cdouble(double(rng.range(-9, 9))),
                    cdouble(double(rng.range(-9, 9)))};
        CPoint B = {cdouble(double(rng.range(-9, 9))), cdouble(double(rng.nonzero(9))),
                    cdouble(double(rng.nonzero(9)))};
        std::vector<cdouble> line_poly(7, 0.0);
        for (const auto& [m, c] : sextic.terms()) {
            std::vector<cdouble> term = {c.to_complex()};
            for (int i = 0; i < 3; ++i) {
                for (int k = 0; k < m.exp[i]; ++k) {
                    std::vector<cdouble> nt(term.size() + 1, 0.0);
                    for (size_t t = 0; t < term.size(); ++t) {
                        nt[t] += term[t] * A[i];
                        nt[t + 1] += term[t] * B[i];
                    }
                    term = std::move(nt);
                }
            }
            for (size_t t = 0; t < term.size(); ++t) line_poly[t] += term[t];
        }
        std::vector<cdouble> ts;
        try {
            ts = poly_roots(line_poly);
        } catch (const std::exception&) {
            continue;  // line inside the sextic, or roots did not converge; resample
        }
        for (cdouble t : ts) {
            CPoint s = {A[0] + t * B[0], A[1] + t * B[1], A[2] + t * B[2]};
            CPoint img = {eval_c(net.minors[0], s), eval_c(net.minors[1], s), eval_c(net.minors[2], s)};
            double n = std::max({std::abs(img[0]), std::abs(img[1]), std::abs(img[2])});
            if (n < 1e-10) continue;  // hit a base point
            images.push_back(normalized(img));
        }
    }
    if (static_cast<int>(images.size()) < samples + holdout) {
        throw std::runtime_error("could not sample enough branch points");
    }

    const auto& mons = quartic_monomials();
    auto fill_row = [&](Eigen::MatrixXcd& m, int r, const CPoint& p) {
        double rn = 0.0;
        std::array<cdouble, 15> vals;
        for (int c = 0; c < 15; ++c) {
            cdouble v = 1.0;
            for (int k = 0; k < 3; ++k) {
                for (int t = 0; t < mons[c].exp[k]; ++t) v *= p[k];
            }
            vals[c] = v;
            rn = std::max(rn, std::abs(v));
        }
        for (int c = 0; c < 15; ++c) m(r, c) = vals[c] / rn;
    };

    Eigen::MatrixXcd fit(samples, 15);
    for (int r = 0; r < samples; ++r) fill_row(fit, r, images[r]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(fit, Eigen::ComputeFullV);
    Eigen::VectorXcd v = svd.matrixV().col(14);

    Eigen::MatrixXcd block(15, 15);
    for (int r = 0; r < 15; ++r) fill_row(block, r, images[r]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> bsvd(block);
    double rank_gap = bsvd.singularValues()(14) / bsvd.singularValues()(0);

    BranchFit out;
    for (int c = 0; c < 15; ++c) out.quartic[c] = v(c);
    out.rank_gap = rank_gap;
    out.fit_residual = 0.0;
    for (int h = 0; h < holdout; ++h) {
        const CPoint& p = images[samples + h];
        cdouble s = 0.0;
        for (int c = 0; c < 15; ++c) {
            cdouble mval = 1.0;
            for (int k = 0; k < 3; ++k) {
                for (int t = 0; t < mons[c].exp[k]; ++t) mval *= p[k];
            }
            s += v(c) * mval;
        }
        out.fit_residual = std::max(out.fit_residual, std::abs(s));
    }
    if (out.fit_residual > tol) {
        throw std::runtime_error("branch quartic fit residual " + std::to_string(out.fit_residual) +
                                 " above tolerance");
    }
    return out;
}

}  // namespace lueroth
