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
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lueroth {

/// Thrown when two scalars live in incompatible quadratic extensions.
struct FieldMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact field element: a plain rational, or a + b*t in Q[t]/(t^2 - d)
/// for a fixed square-free integer d.
///
/// Elements with zero t-part are normalized to the plain-rational form
/// (d == 0), so rationals embed silently into any quadratic extension.
/// Rationals are kept canonical (lowest terms, positive denominator) by GMP.
class Scalar {
  public:
    Scalar() : d_(0) {}
    Scalar(long n) : a_(n), d_(0) {}
    Scalar(const mpq_class& r) : a_(r), d_(0) { a_.canonicalize(); }
    Scalar(mpq_class a, mpq_class b, long d);

    /// Parses an exact fraction like "-3/2" or "7".
    static Scalar from_string(const std::string& s);
    /// The generator t with t^2 = d.
    static Scalar sqrt_of(long d) { return Scalar(0, 1, d); }

    long ext_d() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    const mpq_class& rat_part() const { return a_; }
    const mpq_class& t_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar conj() const { return Scalar(a_, -b_, d_); }
    /// Field norm a^2 - d b^2; zero iff the element is zero.
    mpq_class norm() const;
    Scalar inverse() const;

    /// "3/2" for rationals, "3/2+(-1/4)t" for extension elements.
    std::string str() const;

    /// Numeric embedding; for d < 0 maps t to i*sqrt(|d|).
    std::complex<double> to_complex() const;
    double to_double() const;

  private:
    mpq_class a_, b_;
    long d_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

/// Joins the extension discriminants of two operands; throws FieldMismatch
/// when both are nonzero and distinct.
long join_fields(long d1, long d2);

/// d must be square-free and different from 0 and 1.
bool valid_extension(long d);

}  // namespace lueroth
