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

#ifndef TRANSIT_REAL_HPP
#define TRANSIT_REAL_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace transit
{

// Binary precision that carries at least `digits` significant decimal digits.
inline mpfr_prec_t bits_for_digits(int digits)
{
    if (digits < 1) {
        throw std::invalid_argument("precision must be at least one decimal digit");
    }
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 4;
}

inline int digits_for_bits(mpfr_prec_t bits)
{
    return static_cast<int>(std::floor((bits - 4) * 0.30102999566398120));
}

// Owning wrapper around an MPFR value. Every value carries its own binary
// precision; binary operations round to the larger of the operand precisions.
class Real
{
public:
    explicit Real(mpfr_prec_t bits = 64)
    {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    Real(long value, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    Real(const mpz_class &value, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    Real(const mpq_class &value, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }
    Real(std::string_view decimal, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        const std::string s(decimal);
        if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(v_);
            throw std::invalid_argument("malformed decimal string: '" + s + "'");
        }
    }

    Real(const Real &other)
    {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real &&other) noexcept
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    Real &operator=(const Real &other)
    {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real &operator=(Real &&other) noexcept
    {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real()
    {
        mpfr_clear(v_);
    }

    mpfr_prec_t precision() const
    {
        return mpfr_get_prec(v_);
    }
    // Same value rounded to a new precision.
    Real rounded(mpfr_prec_t bits) const
    {
        Real r(bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr get()
    {
        return v_;
    }
    mpfr_srcptr get() const
    {
        return v_;
    }

    bool is_zero() const
    {
        return mpfr_zero_p(v_) != 0;
    }
    bool is_finite() const
    {
        return mpfr_number_p(v_) != 0;
    }
    int sign() const
    {
        return mpfr_sgn(v_);
    }
    double to_double() const
    {
        return mpfr_get_d(v_, MPFR_RNDN);
    }
    // Decimal exponent e with |x| in [10^(e-1), 10^e); meaningless for zero.
    long decimal_exponent() const;

    // Normalised scientific form "-0.d1d2...dNeE" with N significant digits,
    // value = ±0.d1...dN × 10^E. Zero prints as "0".
    std::string to_decimal(int digits) const;

    Real operator-() const
    {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real &operator+=(const Real &o)
    {
        grow_to(o);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real &operator-=(const Real &o)
    {
        grow_to(o);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real &operator*=(const Real &o)
    {
        grow_to(o);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real &operator/=(const Real &o)
    {
        grow_to(o);
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real &operator*=(long k)
    {
        mpfr_mul_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    Real &operator/=(long k)
    {
        mpfr_div_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }

    friend Real operator+(Real a, const Real &b)
    {
        return a += b;
    }
    friend Real operator-(Real a, const Real &b)
    {
        return a -= b;
    }
    friend Real operator*(Real a, const Real &b)
    {
        return a *= b;
    }
    friend Real operator/(Real a, const Real &b)
    {
        return a /= b;
    }
    friend Real operator*(Real a, long k)
    {
        return a *= k;
    }
    friend Real operator/(Real a, long k)
    {
        return a /= k;
    }

    friend bool operator==(const Real &a, const Real &b)
    {
        return mpfr_equal_p(a.v_, b.v_) != 0;
    }
    friend std::partial_ordering operator<=>(const Real &a, const Real &b)
    {
        if (mpfr_unordered_p(a.v_, b.v_)) {
            return std::partial_ordering::unordered;
        }
        const int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }

    friend std::ostream &operator<<(std::ostream &os, const Real &x)
    {
        return os << x.to_decimal(digits_for_bits(x.precision()));
    }

private:
    void grow_to(const Real &o)
    {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
            mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
        }
    }

    mpfr_t v_;
};

namespace detail
{

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
inline Real unary(const Real &x)
{
    Real r(x.precision());
    F(r.get(), x.get(), MPFR_RNDN);
    return r;
}

} // namespace detail

inline Real sqrt(const Real &x)
{
    return detail::unary<mpfr_sqrt>(x);
}
inline Real exp(const Real &x)
{
    return detail::unary<mpfr_exp>(x);
}
inline Real log(const Real &x)
{
    return detail::unary<mpfr_log>(x);
}
inline Real log10(const Real &x)
{
    return detail::unary<mpfr_log10>(x);
}
inline Real sin(const Real &x)
{
    return detail::unary<mpfr_sin>(x);
}
inline Real cos(const Real &x)
{
    return detail::unary<mpfr_cos>(x);
}
inline Real abs(const Real &x)
{
    return detail::unary<mpfr_abs>(x);
}

inline Real atan2(const Real &y, const Real &x)
{
    Real r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

inline Real pow(const Real &x, long k)
{
    Real r(x.precision());
    mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

inline Real hypot(const Real &x, const Real &y)
{
    Real r(std::max(x.precision(), y.precision()));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

// pi to the requested precision (MPFR caches the constant internally).
inline Real pi(mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

inline long Real::decimal_exponent() const
{
    if (is_zero() || !is_finite()) {
        return 0;
    }
    // mpfr_get_str yields the exponent of the 0.ddd form directly.
    mpfr_exp_t e = 0;
    char *s = mpfr_get_str(nullptr, &e, 10, 2, v_, MPFR_RNDN);
    mpfr_free_str(s);
    return static_cast<long>(e);
}

inline std::string Real::to_decimal(int digits) const
{
    if (digits < 1) {
        throw std::invalid_argument("to_decimal needs at least one digit");
    }
    if (is_zero()) {
        return "0";
    }
    if (!is_finite()) {
        return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    }
    mpfr_exp_t e = 0;
    std::unique_ptr<char, void (*)(char *)> raw(
        mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN), mpfr_free_str);
    std::string mant(raw.get());
    std::string out;
    if (!mant.empty() && mant.front() == '-') {
        out.push_back('-');
        mant.erase(0, 1);
    }
    out += "0.";
    out += mant;
    out += 'e';
    out += std::to_string(static_cast<long>(e));
    return out;
}

} // namespace transit

#endif
