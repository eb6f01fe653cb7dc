// Copyright 2026 The transit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSIT_COMPLEX_HPP
#define TRANSIT_COMPLEX_HPP

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <transit/gaussian.hpp>
#include <transit/real.hpp>

namespace transit
{

// Working-precision policy: results are meant to be good to `target_digits`;
// arithmetic runs with `target_digits + guard_digits`.
struct PrecisionPolicy {
    int target_digits = 60;
    int guard_digits = 130;

    PrecisionPolicy() = default;
    explicit PrecisionPolicy(int target) : PrecisionPolicy(target, 2 * target + 10) {}
    PrecisionPolicy(int target, int guard) : target_digits(target), guard_digits(guard)
    {
        if (target_digits < 10) {
            throw std::invalid_argument("PrecisionPolicy: target_digits must be at least 10");
        }
        if (guard_digits < 0) {
            throw std::invalid_argument("PrecisionPolicy: guard_digits must be non-negative");
        }
    }

    int working_digits() const
    {
        return target_digits + guard_digits;
    }
    mpfr_prec_t working_bits() const
    {
        return bits_for_digits(working_digits());
    }
    // 10^-target
    Real target_epsilon() const
    {
        return pow(Real(10, working_bits()), -target_digits);
    }
    Real working_epsilon() const
    {
        return pow(Real(10, working_bits()), -working_digits());
    }
};

// Complex value over Real parts; precision follows the parts.
class Complex
{
public:
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(re.precision()) {}
    Complex(const GaussianRational &z, mpfr_prec_t bits) : re(z.re, bits), im(z.im, bits) {}

    mpfr_prec_t precision() const
    {
        return std::max(re.precision(), im.precision());
    }
    int digits() const
    {
        return digits_for_bits(precision());
    }
    bool is_zero() const
    {
        return re.is_zero() && im.is_zero();
    }

    Complex conj() const
    {
        return {re, -im};
    }
    Real abs() const
    {
        return hypot(re, im);
    }
    Real norm() const
    {
        return re * re + im * im;
    }
    Real arg() const
    {
        return atan2(im, re);
    }

    Complex operator-() const
    {
        return {-re, -im};
    }
    Complex &operator+=(const Complex &o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex &operator-=(const Complex &o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex &operator*=(const Complex &o)
    {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex &operator*=(const Real &x)
    {
        re *= x;
        im *= x;
        return *this;
    }
    Complex &operator/=(const Real &x)
    {
        re /= x;
        im /= x;
        return *this;
    }
    Complex &operator*=(long k)
    {
        re *= k;
        im *= k;
        return *this;
    }
    Complex &operator/=(long k)
    {
        re /= k;
        im /= k;
        return *this;
    }
    Complex &operator/=(const Complex &o)
    {
        const Real n = o.norm();
        if (n.is_zero()) {
            throw std::domain_error("complex division by zero");
        }
        *this *= o.conj();
        return *this /= n;
    }

    friend Complex operator+(Complex a, const Complex &b)
    {
        return a += b;
    }
    friend Complex operator-(Complex a, const Complex &b)
    {
        return a -= b;
    }
    friend Complex operator*(Complex a, const Complex &b)
    {
        return a *= b;
    }
    friend Complex operator/(Complex a, const Complex &b)
    {
        return a /= b;
    }
    friend Complex operator*(Complex a, const Real &x)
    {
        return a *= x;
    }
    friend Complex operator*(const Real &x, Complex a)
    {
        return a *= x;
    }
    friend Complex operator/(Complex a, const Real &x)
    {
        return a /= x;
    }
    friend Complex operator*(Complex a, long k)
    {
        return a *= k;
    }
    friend Complex operator/(Complex a, long k)
    {
        return a /= k;
    }
    friend bool operator==(const Complex &a, const Complex &b)
    {
        return a.re == b.re && a.im == b.im;
    }

    friend std::ostream &operator<<(std::ostream &os, const Complex &z)
    {
        const int d = z.digits();
        return os << z.re.to_decimal(d) << (z.im.sign() < 0 ? " - i*" : " + i*") << transit::abs(z.im).to_decimal(d);
    }
};

inline Complex exp(const Complex &z)
{
    const Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// Principal branch.
inline Complex log(const Complex &z)
{
    return {log(z.abs()), z.arg()};
}

// Principal branch.
inline Complex sqrt(const Complex &z)
{
    if (z.is_zero()) {
        return z;
    }
    const Real r = z.abs();
    Real u = sqrt((r + abs(z.re)) / 2);
    Real v = z.im / (u * 2);
    if (z.re.sign() >= 0) {
        return {std::move(u), std::move(v)};
    }
    return z.im.sign() >= 0 ? Complex(abs(v), std::move(u)) : Complex(abs(v), -u);
}

inline Complex square(const Complex &z)
{
    return z * z;
}

} // namespace transit

#endif
