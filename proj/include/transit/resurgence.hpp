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

#ifndef TRANSIT_RESURGENCE_HPP
#define TRANSIT_RESURGENCE_HPP

#include <stdexcept>
#include <string>

#include <transit/coefficients.hpp>
#include <transit/complex.hpp>
#include <transit/gaussian.hpp>
#include <transit/special.hpp>

namespace transit
{

enum class SeriesParity { odd, even };

inline const char *to_string(SeriesParity p)
{
    return p == SeriesParity::odd ? "odd" : "even";
}

// sin(m pi / 2), exactly.
constexpr int sin_half_pi(long m)
{
    switch (((m % 4) + 4) % 4) {
        case 1:
            return 1;
        case 3:
            return -1;
        default:
            return 0;
    }
}

// Sign s of sin((n + 1/2) pi / 2) = s * sqrt(2)/2.
constexpr int sin_quarter_odd_sign(long n)
{
    const long r = (((2 * n + 1) % 8) + 8) % 8;
    return r == 1 || r == 3 ? 1 : -1;
}

// Gamma(m) / (2 pi)^m for integer m >= 1.
inline Real factorial_scale(long m, const PrecisionPolicy &policy)
{
    const auto bits = policy.working_bits();
    return gamma_int_or_half(2 * m, policy) / pow(pi(bits) * 2, m);
}

// -(1/pi) coeff sin((n-k) pi/2) Gamma(n-k) / (2 pi)^{n-k}; exactly zero when n-k is even.
inline Complex inverse_factorial_term(long n, long k, const Complex &coeff, const PrecisionPolicy &policy)
{
    const auto bits = policy.working_bits();
    const int s = sin_half_pi(n - k);
    if (s == 0) {
        return Complex(bits);
    }
    return coeff * (factorial_scale(n - k, policy) / pi(bits)) * static_cast<long>(-s);
}

inline Real inverse_factorial_term(long n, long k, const Real &coeff, const PrecisionPolicy &policy)
{
    return inverse_factorial_term(n, k, Complex(coeff), policy).re;
}

inline Complex to_complex(const GaussianRational &z, const PrecisionPolicy &policy)
{
    return Complex(z, policy.working_bits());
}

// exp(t^2/2) with t^2 formed exactly.
inline Complex half_gaussian_growth(const GaussianRational &tau, const PrecisionPolicy &policy)
{
    GaussianRational h = tau * tau;
    h *= Rational(1, 2);
    return exp(to_complex(h, policy));
}

namespace detail
{

inline void check_truncation(long n, long N, const char *what)
{
    if (n < 1) {
        throw std::out_of_range(std::string(what) + ": n must be at least 1");
    }
    if (N < 0 || N >= n) {
        throw std::out_of_range(std::string(what) + ": need 0 <= N < n (got n=" + std::to_string(n)
                                + ", N=" + std::to_string(N) + ")");
    }
}

inline void check_table_index(const CoefficientTable &table, long idx, const char *what)
{
    if (idx > table.max_n()) {
        throw std::out_of_range(std::string(what) + ": table stops at index " + std::to_string(table.max_n())
                                + ", need " + std::to_string(idx));
    }
}

} // namespace detail

// Gamma(n)/(2 pi)^{n+1/2} sin(n pi/2) exp(t^2/2) erf(t/sqrt2); exactly zero for even n.
inline Complex odd_leading_term(long n, const GaussianRational &tau, const PrecisionPolicy &policy)
{
    const auto bits = policy.working_bits();
    const int s = sin_half_pi(n);
    if (s == 0) {
        return Complex(bits);
    }
    const Real two_pi = pi(bits) * 2;
    const Real scale = factorial_scale(n, policy) / sqrt(two_pi);
    const Complex arg = to_complex(tau, policy) / sqrt(Real(2, bits));
    return half_gaussian_growth(tau, policy) * erf(arg, policy) * scale * static_cast<long>(s);
}

// -Gamma(n+1/2)/(2 pi)^{n+1} sin((n+1/2) pi/2), the tau-independent factor of the even leading term.
inline Real even_leading_factor(long n, const PrecisionPolicy &policy)
{
    const auto bits = policy.working_bits();
    const Real two_pi = pi(bits) * 2;
    const Real s = sqrt(Real(2, bits)) / 2 * static_cast<long>(sin_quarter_odd_sign(n));
    return -(gamma_int_or_half(2 * n + 1, policy) / pow(two_pi, n + 1) * s);
}

// Truncated inverse factorial series for C_{2n-1}(tau), sum over k = 1..N.
inline Complex approx_C_odd(long n, const GaussianRational &tau, long N, const CoefficientTable &table,
                            const PrecisionPolicy &policy)
{
    detail::check_truncation(n, N, "approx_C_odd");
    detail::check_table_index(table, 2 * N - 1, "approx_C_odd");
    Complex acc = odd_leading_term(n, tau, policy);
    for (long k = 1; k <= N; ++k) {
        if (sin_half_pi(n - k) == 0) {
            continue;
        }
        acc += inverse_factorial_term(n, k, to_complex(table.C(static_cast<int>(2 * k - 1))(tau), policy), policy);
    }
    return acc;
}

// Truncated inverse factorial series for C_{2n}(tau), sum over k = 0..N.
inline Complex approx_C_even(long n, const GaussianRational &tau, long N, const CoefficientTable &table,
                             const PrecisionPolicy &policy)
{
    detail::check_truncation(n, N, "approx_C_even");
    detail::check_table_index(table, 2 * N, "approx_C_even");
    Complex acc = half_gaussian_growth(tau, policy) * even_leading_factor(n, policy);
    for (long k = 0; k <= N; ++k) {
        if (sin_half_pi(n - k) == 0) {
            continue;
        }
        acc += inverse_factorial_term(n, k, to_complex(table.C(static_cast<int>(2 * k))(tau), policy), policy);
    }
    return acc;
}

// N-term truncation (k = 0..N-1) of the Stirling-coefficient series
// gamma_n ~ -(1/pi) sum gamma_k sin((n-k) pi/2) Gamma(n-k)/(2 pi)^{n-k}.
inline Real approx_gamma_n(long n, long N, const CoefficientTable &table, const PrecisionPolicy &policy)
{
    detail::check_truncation(n, N, "approx_gamma_n");
    Real acc(policy.working_bits());
    for (long k = 0; k < N; ++k) {
        if (sin_half_pi(n - k) == 0) {
            continue;
        }
        acc += inverse_factorial_term(n, k, Real(table.gamma(static_cast<int>(k)), policy.working_bits()), policy);
    }
    return acc;
}

// N-term truncation (k = 0..N-1) of the series for C_{2n}(0), leading term always included.
inline Real approx_c0_even(long n, long N, const CoefficientTable &table, const PrecisionPolicy &policy)
{
    detail::check_truncation(n, N, "approx_c0_even");
    detail::check_table_index(table, 2 * (N - 1), "approx_c0_even");
    Real acc = even_leading_factor(n, policy);
    for (long k = 0; k < N; ++k) {
        if (sin_half_pi(n - k) == 0) {
            continue;
        }
        const Rational c0 = table.C(static_cast<int>(2 * k)).coeff(0);
        acc += inverse_factorial_term(n, k, Real(c0, policy.working_bits()), policy);
    }
    return acc;
}

// |R| / (Gamma(n-N)/(2 pi)^{n-N}), R the remainder after truncating the
// companion series for D_{2n-1} (odd) or D_{2n} (even) at N terms.
inline Real prop1_residual(long n, long N, const GaussianRational &tau, SeriesParity parity,
                           const CoefficientTable &table, const PrecisionPolicy &policy)
{
    detail::check_truncation(n, N, "prop1_residual");
    const long top = parity == SeriesParity::odd ? 2 * n - 1 : 2 * n;
    detail::check_table_index(table, top, "prop1_residual");
    if (!table.has_companions()) {
        throw std::invalid_argument("prop1_residual: table was built without D_n");
    }
    const auto bits = policy.working_bits();
    Complex approx(bits);
    if (parity == SeriesParity::odd) {
        approx = inverse_factorial_term(n, 0, Complex(Real(1, bits)), policy);
        for (long k = 1; k < N; ++k) {
            if (sin_half_pi(n - k) != 0) {
                approx += inverse_factorial_term(n, k, to_complex(table.D(static_cast<int>(2 * k - 1))(tau), policy),
                                                 policy);
            }
        }
    } else {
        for (long k = 0; k < N; ++k) {
            if (sin_half_pi(n - k) != 0) {
                approx += inverse_factorial_term(n, k, to_complex(table.D(static_cast<int>(2 * k))(tau), policy),
                                                 policy);
            }
        }
    }
    const Complex exact = to_complex(table.D(static_cast<int>(top))(tau), policy);
    return (exact - approx).abs() / factorial_scale(n - N, policy);
}

// One row of an approximation-versus-exact comparison.
struct ApproxReport {
    long n = 0;
    GaussianRational tau;
    long N = 0;
    SeriesParity parity = SeriesParity::odd;
    int digits = 0;
    Complex exact;
    Complex approx;
    Complex abs_err; // exact - approx
    Real rel_err;    // |abs_err| / |exact|, zero when exact is zero
};

inline ApproxReport make_report(long n, const GaussianRational &tau, long N, SeriesParity parity,
                                const CoefficientTable &table, const PrecisionPolicy &policy)
{
    ApproxReport r;
    r.n = n;
    r.tau = tau;
    r.N = N;
    r.parity = parity;
    r.digits = policy.target_digits;
    const long idx = parity == SeriesParity::odd ? 2 * n - 1 : 2 * n;
    detail::check_truncation(n, N, "make_report");
    detail::check_table_index(table, idx, "make_report");
    r.exact = to_complex(table.C(static_cast<int>(idx))(tau), policy);
    r.approx = parity == SeriesParity::odd ? approx_C_odd(n, tau, N, table, policy)
                                           : approx_C_even(n, tau, N, table, policy);
    r.abs_err = r.exact - r.approx;
    r.rel_err = r.exact.is_zero() ? Real(policy.working_bits()) : r.abs_err.abs() / r.exact.abs();
    return r;
}

} // namespace transit

#endif
