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

#ifndef TRANSIT_SPECIAL_HPP
#define TRANSIT_SPECIAL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <transit/complex.hpp>
#include <transit/rational.hpp>
#include <transit/real.hpp>

namespace transit
{

// Cancellation in a summation ate more digits than the guard digits provide.
class precision_infeasible : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An iterative evaluation did not reach its tolerance within the iteration cap.
class non_convergence : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Gamma(twice_arg / 2) for twice_arg >= 1, from exact factorials:
//   Gamma(m) = (m-1)!,  Gamma(m + 1/2) = sqrt(pi) (2m)! / (4^m m!).
inline Real gamma_int_or_half(long twice_arg, const PrecisionPolicy &policy)
{
    if (twice_arg < 1) {
        throw std::domain_error("gamma_int_or_half: argument must be positive");
    }
    const auto bits = policy.working_bits();
    if (twice_arg % 2 == 0) {
        return Real(factorial(static_cast<unsigned long>(twice_arg / 2 - 1)), bits);
    }
    const auto m = static_cast<unsigned long>(twice_arg / 2);
    Integer four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, m);
    Rational ratio(factorial(2 * m), four_pow * factorial(m));
    ratio.canonicalize();
    return Real(ratio, bits) * sqrt(pi(bits));
}

// erf by its Maclaurin series (2/sqrt(pi)) sum (-1)^n z^{2n+1} / (n! (2n+1)).
// Valid for |z| <= 30; throws precision_infeasible when the largest term
// exceeds the result by more than the guard digits.
inline Complex erf(const Complex &z, const PrecisionPolicy &policy)
{
    const auto bits = policy.working_bits();
    const Complex w(z.re.rounded(bits), z.im.rounded(bits));
    if (w.abs() > Real(30, bits)) {
        throw std::domain_error("erf: |z| > 30 is outside the series regime");
    }
    if (w.is_zero()) {
        return Complex(bits);
    }
    const Complex minus_z2 = -(w * w);
    const Real eps2 = pow(policy.working_epsilon(), 2);
    const Real decreasing_after = minus_z2.abs();
    Complex power = w; // (-z^2)^n z / n!
    Complex sum = w;
    Real max_term2 = w.norm();
    for (long n = 1;; ++n) {
        power *= minus_z2;
        power /= n;
        const Complex term = power / (2 * n + 1);
        sum += term;
        const Real t2 = term.norm();
        if (t2 > max_term2) {
            max_term2 = t2;
        }
        if (Real(n, bits) > decreasing_after && t2 <= eps2 * sum.norm()) {
            break;
        }
    }
    const Real sum2 = sum.norm();
    if (sum2.is_zero()
        || (log10(max_term2 / sum2) / 2).to_double() > static_cast<double>(policy.guard_digits)) {
        throw precision_infeasible("erf: cancellation exceeds " + std::to_string(policy.guard_digits)
                                   + " guard digits; raise guard_digits");
    }
    return sum * (Real(2, bits) / sqrt(pi(bits)));
}

inline Complex erfc(const Complex &z, const PrecisionPolicy &policy)
{
    const auto bits = policy.working_bits();
    return Complex(Real(1, bits)) - erf(z, policy);
}

// Default iteration cap for the incomplete gamma oracle. Both branches need
// O(sqrt(a)) iterations near the transition point z = a.
inline long q_oracle_iteration_cap(long a, const PrecisionPolicy &policy)
{
    const auto root = static_cast<long>(std::sqrt(static_cast<double>(a)));
    return 50L * policy.target_digits * (1 + root / 10);
}

namespace detail
{

inline void check_oracle_args(long a, const Complex &z)
{
    if (a < 1) {
        throw std::domain_error("q_oracle: a must be a positive integer");
    }
    if (z.re.sign() <= 0) {
        throw std::domain_error("q_oracle: Re(z) must be positive");
    }
}

} // namespace detail

// Q(a, z) = 1 - z^a e^{-z} sum_{n>=0} z^n / Gamma(a+n+1).
inline Complex q_oracle_series(long a, const Complex &z, const PrecisionPolicy &policy, long max_iter)
{
    detail::check_oracle_args(a, z);
    const auto bits = policy.working_bits();
    const Complex w(z.re.rounded(bits), z.im.rounded(bits));
    const Real eps2 = pow(policy.working_epsilon(), 2);
    const Real decreasing_after = w.abs() - Real(a, bits);
    Complex term(Real(1, bits));
    Complex sum = term;
    long n = 1;
    for (; n <= max_iter; ++n) {
        term *= w;
        term /= a + n;
        sum += term;
        if (Real(n, bits) > decreasing_after && term.norm() <= eps2 * sum.norm()) {
            break;
        }
    }
    if (n > max_iter) {
        throw non_convergence("q_oracle: series did not converge in " + std::to_string(max_iter) + " terms");
    }
    const Real log_fact = log(Real(factorial(static_cast<unsigned long>(a)), bits));
    const Complex prefactor = exp(log(w) * Real(a, bits) - w - Complex(log_fact));
    return Complex(Real(1, bits)) - prefactor * sum;
}

// Q(a, z) = z^a e^{-z} / Gamma(a) * 1/(z+1-a- 1(1-a)/(z+3-a- 2(2-a)/(z+5-a- ...))),
// evaluated with the modified Lentz method.
inline Complex q_oracle_continued_fraction(long a, const Complex &z, const PrecisionPolicy &policy, long max_iter)
{
    detail::check_oracle_args(a, z);
    const auto bits = policy.working_bits();
    const Complex w(z.re.rounded(bits), z.im.rounded(bits));
    const Real eps = policy.working_epsilon();
    const Real tiny = pow(Real(10, bits), -10 * policy.working_digits());
    const auto guard_zero = [&tiny](Complex &x) {
        if (x.abs() < tiny) {
            x = Complex(tiny);
        }
    };
    const Complex one(Real(1, bits));
    Complex b = w + Complex(Real(1 - a, bits));
    Complex c = one / Complex(tiny);
    Complex d = b;
    guard_zero(d);
    d = one / d;
    Complex h = d;
    long i = 1;
    for (; i <= max_iter; ++i) {
        const Real an(-i * (i - a), bits);
        b += Complex(Real(2, bits));
        d = d * an + b;
        guard_zero(d);
        c = b + Complex(an) / c;
        guard_zero(c);
        d = one / d;
        const Complex delta = d * c;
        h *= delta;
        if ((delta - one).abs() <= eps) {
            break;
        }
    }
    if (i > max_iter) {
        throw non_convergence("q_oracle: continued fraction did not converge in " + std::to_string(max_iter)
                              + " iterations");
    }
    const Real log_gamma_a = log(Real(factorial(static_cast<unsigned long>(a - 1)), bits));
    return exp(log(w) * Real(a, bits) - w - Complex(log_gamma_a)) * h;
}

// Independent reference for Q(a, z) = Gamma(a, z) / Gamma(a), a a positive
// integer and Re z > 0: power series when |z| <= a, continued fraction otherwise.
inline Complex q_oracle(long a, const Complex &z, const PrecisionPolicy &policy, long max_iter = 0)
{
    if (max_iter <= 0) {
        max_iter = q_oracle_iteration_cap(a, policy);
    }
    if (z.abs() <= Real(a, z.precision())) {
        return q_oracle_series(a, z, policy, max_iter);
    }
    return q_oracle_continued_fraction(a, z, policy, max_iter);
}

} // namespace transit

#endif
