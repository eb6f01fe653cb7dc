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

#ifndef TRANSIT_EXPANSION_HPP
#define TRANSIT_EXPANSION_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <transit/coefficients.hpp>
#include <transit/complex.hpp>
#include <transit/special.hpp>

namespace transit
{

struct ExpansionResult {
    long a = 0;
    GaussianRational tau;
    int terms = 0;
    int digits = 0;
    Complex value;
    // partials[k] = erfc head plus the C_0..C_{k-1} terms; partials.back() == value.
    std::vector<Complex> partials;
    Complex oracle;
    std::vector<Real> errors_by_term; // |partials[k] - oracle|
};

// Transitional expansion of Q(a, a + t sqrt(a)) with C_0..C_terms:
//   erfc(t/sqrt2)/2 + exp(-t^2/2)/sqrt(2 pi a) sum_{n=0..terms} C_n(t) a^{-n/2},
// compared against the independent q_oracle.
inline ExpansionResult eval_Q_transitional(long a, const GaussianRational &tau, int terms,
                                           const CoefficientTable &table, const PrecisionPolicy &policy)
{
    if (a < 1) {
        throw std::invalid_argument("eval_Q_transitional: a must be a positive integer");
    }
    if (terms < 0 || terms > table.max_n()) {
        throw std::out_of_range("eval_Q_transitional: terms must lie in [0, " + std::to_string(table.max_n()) + "]");
    }
    if (tau.norm() >= Rational(a)) {
        throw std::invalid_argument("eval_Q_transitional: need |tau| < sqrt(a)");
    }
    const auto bits = policy.working_bits();
    const Real root_a = sqrt(Real(a, bits));
    const Complex t = Complex(tau, bits);

    ExpansionResult r;
    r.a = a;
    r.tau = tau;
    r.terms = terms;
    r.digits = policy.target_digits;

    GaussianRational half_sq = tau * tau;
    half_sq *= Rational(-1, 2);
    const Complex prefactor = exp(Complex(half_sq, bits)) / sqrt(pi(bits) * 2 * Real(a, bits));

    Complex partial = erfc(t / sqrt(Real(2, bits)), policy) / 2;
    r.partials.push_back(partial);
    Real scale(1, bits); // a^{-n/2}
    for (int n = 0; n <= terms; ++n) {
        const GaussianRational cn = table.C(n)(tau);
        if (!(cn.re == 0 && cn.im == 0)) {
            partial += prefactor * Complex(cn, bits) * scale;
        }
        r.partials.push_back(partial);
        scale /= root_a;
    }
    r.value = partial;
    r.oracle = q_oracle(a, Complex(Real(a, bits)) + t * root_a, policy);
    for (const auto &p : r.partials) {
        r.errors_by_term.push_back((p - r.oracle).abs());
    }
    return r;
}

// Empirical decay exponents log(err1_k / err2_k) / log(a2 / a1), one per partial sum.
inline std::vector<double> error_decay_exponent(const ExpansionResult &first, const ExpansionResult &second)
{
    if (first.a == second.a) {
        throw std::invalid_argument("error_decay_exponent: the two results must use different a");
    }
    if (first.errors_by_term.size() != second.errors_by_term.size()) {
        throw std::invalid_argument("error_decay_exponent: results have different term counts");
    }
    const int digits = std::min(first.digits, second.digits);
    const auto bits = bits_for_digits(digits + 10);
    const Real floor_ = pow(Real(10, bits), -digits);
    const double log_ratio = std::log(static_cast<double>(second.a) / static_cast<double>(first.a));
    std::vector<double> out;
    for (std::size_t k = 0; k < first.errors_by_term.size(); ++k) {
        const Real &e1 = first.errors_by_term[k];
        const Real &e2 = second.errors_by_term[k];
        if (e1 <= floor_ || e2 <= floor_) {
            throw std::domain_error("error_decay_exponent: error at term " + std::to_string(k)
                                    + " is below working precision");
        }
        out.push_back(log(e1 / e2).to_double() / log_ratio);
    }
    return out;
}

} // namespace transit

#endif
