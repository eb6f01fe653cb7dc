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

#ifndef TRANSIT_GAUSSIAN_HPP
#define TRANSIT_GAUSSIAN_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <transit/rational.hpp>

namespace transit
{

// Complex number with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    static GaussianRational i()
    {
        return {Rational(0), Rational(1)};
    }

    bool is_real() const
    {
        return im == 0;
    }
    GaussianRational conj() const
    {
        return {re, -im};
    }
    // |z|^2
    Rational norm() const
    {
        return re * re + im * im;
    }

    GaussianRational &operator+=(const GaussianRational &o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational &operator*=(const GaussianRational &o)
    {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational &operator*=(const Rational &q)
    {
        re *= q;
        im *= q;
        return *this;
    }
    GaussianRational &operator/=(const GaussianRational &o)
    {
        const Rational n = o.norm();
        if (n == 0) {
            throw std::domain_error("division by zero Gaussian rational");
        }
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b)
    {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b)
    {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b)
    {
        return a *= b;
    }
    friend GaussianRational operator*(GaussianRational a, const Rational &q)
    {
        return a *= q;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b)
    {
        return a /= b;
    }
    GaussianRational operator-() const
    {
        return {-re, -im};
    }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re == b.re && a.im == b.im;
    }

    friend std::ostream &operator<<(std::ostream &os, const GaussianRational &z)
    {
        os << to_string(z.re);
        if (z.im != 0) {
            os << (z.im < 0 ? " - " : " + ") << to_string(Rational(abs(z.im))) << "i";
        }
        return os;
    }
};

// Parses the command-line point syntax "re" or "re,im" with rational parts.
inline GaussianRational parse_gaussian(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        return {parse_rational(text)};
    }
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

inline std::string to_point_string(const GaussianRational &z)
{
    if (z.im == 0) {
        return to_string(z.re);
    }
    return to_string(z.re) + "," + to_string(z.im);
}

} // namespace transit

#endif
