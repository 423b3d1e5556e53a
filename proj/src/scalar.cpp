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

#include "lueroth/scalar.hpp"

#include <cmath>
#include <cstdlib>

namespace lueroth {

bool valid_extension(long d) {
    if (d == 0 || d == 1) return false;
    long m = std::labs(d);
    for (long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
    }
    return true;
}

long join_fields(long d1, long d2) {
    if (d1 == d2) return d1;
    if (d1 == 0) return d2;
    if (d2 == 0) return d1;
    throw FieldMismatch("incompatible extensions Q(sqrt(" + std::to_string(d1) +
                        ")) and Q(sqrt(" + std::to_string(d2) + "))");
}

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) {
        d_ = 0;
    } else if (!valid_extension(d_)) {
        throw std::invalid_argument("extension discriminant must be square-free, not 0 or 1");
    }
}

Scalar Scalar::from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return Scalar(r);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-a_), mpq_class(-b_), d_); }

Scalar Scalar::operator+(const Scalar& o) const {
    long d = join_fields(d_, o.d_);
    return Scalar(mpq_class(a_ + o.a_), mpq_class(b_ + o.b_), d);
}

Scalar Scalar::operator-(const Scalar& o) const {
    long d = join_fields(d_, o.d_);
    return Scalar(mpq_class(a_ - o.a_), mpq_class(b_ - o.b_), d);
}

Scalar Scalar::operator*(const Scalar& o) const {
    long d = join_fields(d_, o.d_);
    mpq_class a = a_ * o.a_;
    if (d != 0) a += mpq_class(d) * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    return Scalar(std::move(a), std::move(b), d);
}

mpq_class Scalar::norm() const {
    mpq_class n = a_ * a_;
    if (d_ != 0) n -= mpq_class(d_) * b_ * b_;
    return n;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (d_ == 0) return Scalar(mpq_class(1 / a_));
    mpq_class n = norm();
    // t^2 = d square-free, so the norm form a^2 - d b^2 has no nonzero roots.
    return Scalar(mpq_class(a_ / n), mpq_class(-b_ / n), d_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::string Scalar::str() const {
    if (d_ == 0) return a_.get_str();
    return a_.get_str() + "+(" + b_.get_str() + ")t";
}

std::complex<double> Scalar::to_complex() const {
    double a = a_.get_d();
    if (d_ == 0) return {a, 0.0};
    double b = b_.get_d();
    if (d_ < 0) {
        double s = std::sqrt(static_cast<double>(-d_));
        return {a, b * s};
    }
    return {a + b * std::sqrt(static_cast<double>(d_)), 0.0};
}

double Scalar::to_double() const {
    std::complex<double> z = to_complex();
    if (z.imag() != 0.0) throw std::domain_error("scalar is not real");
    return z.real();
}

}  // namespace lueroth
