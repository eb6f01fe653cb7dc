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

#ifndef TRANSIT_POLY_HPP
#define TRANSIT_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <transit/gaussian.hpp>
#include <transit/rational.hpp>

namespace transit
{

enum class Parity { even, odd, none };

inline const char *to_string(Parity p)
{
    switch (p) {
        case Parity::even:
            return "even";
        case Parity::odd:
            return "odd";
        default:
            return "none";
    }
}

// Polynomial in one variable with exact rational coefficients, stored densely
// by ascending power. The top stored coefficient is never zero; the zero
// polynomial has no coefficients and degree -1.
class Poly
{
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
    {
        normalize();
    }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs)
    {
        normalize();
    }
    explicit Poly(Rational constant) : c_{std::move(constant)}
    {
        normalize();
    }

    static Poly monomial(Rational coeff, std::size_t power)
    {
        std::vector<Rational> c(power + 1);
        c[power] = std::move(coeff);
        return Poly(std::move(c));
    }

    int degree() const
    {
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const
    {
        return c_.empty();
    }
    Parity parity() const
    {
        return parity_;
    }
    const std::vector<Rational> &coeffs() const
    {
        return c_;
    }
    // Coefficient of t^k; zero outside the stored range.
    Rational coeff(long k) const
    {
        if (k < 0 || k >= static_cast<long>(c_.size())) {
            return Rational(0);
        }
        return c_[static_cast<std::size_t>(k)];
    }
    const Rational &leading() const
    {
        if (c_.empty()) {
            throw std::logic_error("zero polynomial has no leading coefficient");
        }
        return c_.back();
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) {
            return Poly();
        }
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) {
            if (c_[k] != 0) {
                d[k - 1] = c_[k] * static_cast<unsigned long>(k);
            }
        }
        return Poly(std::move(d));
    }

    // t * p(t)
    Poly times_t() const
    {
        if (c_.empty()) {
            return Poly();
        }
        std::vector<Rational> d(c_.size() + 1);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            d[k + 1] = c_[k];
        }
        return Poly(std::move(d));
    }

    // Horner evaluation; exact.
    GaussianRational operator()(const GaussianRational &z) const
    {
        GaussianRational acc;
        if (z.is_real()) {
            acc.re = eval_real(z.re);
            return acc;
        }
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= z;
            acc.re += *it;
        }
        return acc;
    }
    Rational operator()(const Rational &x) const
    {
        return eval_real(x);
    }

    Poly &operator+=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            if (o.c_[k] != 0) {
                c_[k] += o.c_[k];
            }
        }
        normalize();
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            if (o.c_[k] != 0) {
                c_[k] -= o.c_[k];
            }
        }
        normalize();
        return *this;
    }
    Poly &operator*=(const Rational &q)
    {
        if (q == 0) {
            c_.clear();
        } else {
            for (auto &x : c_) {
                if (x != 0) {
                    x *= q;
                }
            }
        }
        normalize();
        return *this;
    }
    Poly &operator/=(const Rational &q)
    {
        if (q == 0) {
            throw std::domain_error("polynomial divided by zero");
        }
        for (auto &x : c_) {
            if (x != 0) {
                x /= q;
            }
        }
        return *this;
    }
    Poly &operator*=(const Poly &o)
    {
        return *this = *this * o;
    }

    friend Poly operator+(Poly a, const Poly &b)
    {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        return a -= b;
    }
    friend Poly operator*(Poly a, const Rational &q)
    {
        return a *= q;
    }
    friend Poly operator*(const Rational &q, Poly a)
    {
        return a *= q;
    }
    friend Poly operator/(Poly a, const Rational &q)
    {
        return a /= q;
    }
    Poly operator-() const
    {
        Poly r(*this);
        for (auto &x : r.c_) {
            x = -x;
        }
        return r;
    }

    // Schoolbook product, skipping structural zeros (half the entries of a
    // parity-definite polynomial).
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly();
        }
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        Rational tmp;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) {
                    continue;
                }
                mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
                r[i + j] += tmp;
            }
        }
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.c_ == b.c_;
    }

    friend std::ostream &operator<<(std::ostream &os, const Poly &p)
    {
        if (p.is_zero()) {
            return os << "0";
        }
        bool first = true;
        for (std::size_t k = p.c_.size(); k-- > 0;) {
            const Rational &x = p.c_[k];
            if (x == 0) {
                continue;
            }
            os << (first ? (x < 0 ? "-" : "") : (x < 0 ? " - " : " + "));
            const Rational mag = abs(x);
            if (mag != 1 || k == 0) {
                os << mag;
            }
            if (k > 0) {
                os << (mag != 1 ? "*" : "") << "t";
                if (k > 1) {
                    os << "^" << k;
                }
            }
            first = false;
        }
        return os;
    }

private:
    Rational eval_real(const Rational &x) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    void normalize()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
        bool has_even = false, has_odd = false;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] != 0) {
                (k % 2 == 0 ? has_even : has_odd) = true;
            }
        }
        // The zero polynomial counts as even.
        parity_ = has_even && has_odd ? Parity::none : (has_odd ? Parity::odd : Parity::even);
    }

    std::vector<Rational> c_;
    Parity parity_ = Parity::even;
};

} // namespace transit

#endif
