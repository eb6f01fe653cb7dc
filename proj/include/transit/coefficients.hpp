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

#ifndef TRANSIT_COEFFICIENTS_HPP
#define TRANSIT_COEFFICIENTS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <transit/poly.hpp>
#include <transit/rational.hpp>
#include <transit/series.hpp>

namespace transit
{

// Transition polynomials C_0..C_max_n of the expansion
//   Q(a, a + t sqrt(a)) ~ erfc(t/sqrt2)/2 + exp(-t^2/2)/sqrt(2 pi a) sum C_n(t) a^{-n/2}.
//
// Coefficients c_{n,k} of C_n are produced top-down from the seed
// c_{n,3n+2} = 1/(3^{n+1} (n+1)!) by
//   c_{n,k} = (k+2) c_{n,k+2} + (k+1) c_{n-1,k+1} - 2k/(k+1) c_{n-1,k-1} + 1/(k+1) c_{n-1,k-3}
// for k = 3n, 3n-2, ..., with every out-of-range index reading as zero.
// Only indices with the parity of n are visited; the others are zero.
inline std::vector<Poly> gen_C(int max_n)
{
    if (max_n < 0) {
        throw std::invalid_argument("gen_C: max_n must be non-negative");
    }
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    out.push_back(Poly{Rational(-1, 3), Rational(0), Rational(1, 3)});

    Integer three_pow(9), fact(2); // 3^{n+1}, (n+1)! at n = 1
    for (int n = 1; n <= max_n; ++n) {
        const Poly &prev = out.back();
        const long top = 3L * n + 2;
        std::vector<Rational> c(static_cast<std::size_t>(top) + 1);
        c[static_cast<std::size_t>(top)] = Rational(Integer(1), three_pow * fact);
        Rational t1, t2, t3;
        for (long k = top - 2; k >= 0; k -= 2) {
            Rational &ck = c[static_cast<std::size_t>(k)];
            ck = c[static_cast<std::size_t>(k + 2)] * (k + 2);
            t1 = prev.coeff(k + 1) * (k + 1);
            t2 = prev.coeff(k - 1) * (2 * k) / (k + 1);
            t3 = prev.coeff(k - 3) / (k + 1);
            ck += t1;
            ck -= t2;
            ck += t3;
            ck.canonicalize();
        }
        out.emplace_back(std::move(c));
        three_pow *= 3;
        fact *= n + 2;
    }
    return out;
}

// F(a, t) = sum_{n>=1} f_n(t) a^{-n/2} with f_n(t) = (1/n - t^2/(n+2)) (-t)^n.
inline Poly log_series_term(int n)
{
    const Rational sign(n % 2 == 0 ? 1 : -1);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 3);
    c[static_cast<std::size_t>(n)] = sign * Rational(1, n);
    c[static_cast<std::size_t>(n) + 2] = -sign * Rational(1, n + 2);
    return Poly(std::move(c));
}

// p_0..p_max_n with exp(F(a, t)) = sum p_n(t) a^{-n/2}.
inline std::vector<Poly> gen_p(int max_n)
{
    if (max_n < 0) {
        throw std::invalid_argument("gen_p: max_n must be non-negative");
    }
    std::vector<Poly> f;
    f.reserve(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        f.push_back(log_series_term(n));
    }
    return series_exp(f, max_n);
}

// B_0..B_max_idx from sum_{k=0..n} binom(n+1, k) B_k = 0, so B_1 = -1/2.
inline std::vector<Rational> gen_bernoulli(int max_idx)
{
    if (max_idx < 0) {
        throw std::invalid_argument("gen_bernoulli: max_idx must be non-negative");
    }
    std::vector<Rational> b(static_cast<std::size_t>(max_idx) + 1);
    b[0] = 1;
    Integer binom;
    for (int n = 1; n <= max_idx; ++n) {
        Rational acc(0);
        for (int k = 0; k < n; ++k) {
            if (b[static_cast<std::size_t>(k)] == 0) {
                continue;
            }
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(k));
            acc += b[static_cast<std::size_t>(k)] * binom;
        }
        b[static_cast<std::size_t>(n)] = -acc / (n + 1);
        b[static_cast<std::size_t>(n)].canonicalize();
    }
    return b;
}

// Stirling coefficients gamma_0..gamma_max_n, with
// Gamma*(a) ~ sum (-1)^n gamma_n a^{-n} and 1/Gamma*(a) ~ sum gamma_n a^{-n}.
// Obtained by exponentiating log Gamma*(a) ~ sum_{k>=1} B_{2k}/(2k(2k-1)) a^{1-2k}.
inline std::vector<Rational> gen_gamma(int max_n)
{
    if (max_n < 0) {
        throw std::invalid_argument("gen_gamma: max_n must be non-negative");
    }
    const auto bern = gen_bernoulli(max_n + 1);
    std::vector<Rational> log_terms(static_cast<std::size_t>(max_n));
    for (int m = 1; m <= max_n; m += 2) {
        const int k2 = m + 1; // 2k
        log_terms[static_cast<std::size_t>(m - 1)] = bern[static_cast<std::size_t>(k2)] / (k2 * (k2 - 1));
        log_terms[static_cast<std::size_t>(m - 1)].canonicalize();
    }
    auto g = series_exp(log_terms, max_n);
    for (std::size_t n = 1; n < g.size(); n += 2) {
        g[n] = -g[n];
    }
    return g;
}

// D_0..D_max_n:
//   D_{2n-1} = sum_{k=0..n} gamma_{n-k} p_{2k},  D_{2n} = sum_{k=0..n} gamma_{n-k} p_{2k+1}.
// Needs p up to max_n + 1 and gamma up to (max_n + 1) / 2.
inline std::vector<Poly> gen_D(int max_n, const std::vector<Poly> &p, const std::vector<Rational> &gamma)
{
    if (max_n < 0) {
        throw std::invalid_argument("gen_D: max_n must be non-negative");
    }
    if (static_cast<int>(p.size()) < max_n + 2 || static_cast<int>(gamma.size()) < (max_n + 1) / 2 + 1) {
        throw std::invalid_argument("gen_D: not enough p or gamma coefficients");
    }
    std::vector<Poly> d;
    d.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int m = 0; m <= max_n; ++m) {
        const bool odd = m % 2 != 0;
        const int n = odd ? (m + 1) / 2 : m / 2;
        Poly acc;
        for (int k = 0; k <= n; ++k) {
            const auto &g = gamma[static_cast<std::size_t>(n - k)];
            if (g != 0) {
                acc += p[static_cast<std::size_t>(odd ? 2 * k : 2 * k + 1)] * g;
            }
        }
        d.push_back(std::move(acc));
    }
    return d;
}

inline std::vector<Poly> gen_D(int max_n)
{
    return gen_D(max_n, gen_p(max_n + 1), gen_gamma((max_n + 1) / 2 + 1));
}

// Immutable bundle of every exact coefficient family up to a common index.
class CoefficientTable
{
public:
    enum class Contents {
        all,        // C, p, D, gamma, Bernoulli
        transition, // C only; p and D stay empty
    };

    CoefficientTable(int max_n, std::vector<Poly> C, std::vector<Poly> p, std::vector<Poly> D,
                     std::vector<Rational> gamma, std::vector<Rational> bernoulli)
        : max_n_(max_n), C_(std::move(C)), p_(std::move(p)), D_(std::move(D)), gamma_(std::move(gamma)),
          bernoulli_(std::move(bernoulli))
    {
        if (max_n_ < 0 || static_cast<int>(C_.size()) != max_n_ + 1) {
            throw std::invalid_argument("CoefficientTable: C must hold C_0..C_max_n");
        }
        if (!D_.empty() && static_cast<int>(D_.size()) != max_n_ + 1) {
            throw std::invalid_argument("CoefficientTable: D must hold D_0..D_max_n");
        }
    }

    static CoefficientTable build(int max_n, Contents contents = Contents::all)
    {
        if (max_n < 0) {
            throw std::invalid_argument("CoefficientTable: max_n must be non-negative");
        }
        const int gamma_max = (max_n + 1) / 2 + 1;
        auto bern = gen_bernoulli(2 * (gamma_max + 1));
        auto gamma = gen_gamma(gamma_max);
        if (contents == Contents::transition) {
            return CoefficientTable(max_n, gen_C(max_n), {}, {}, std::move(gamma), std::move(bern));
        }
        auto p = gen_p(max_n + 1);
        auto D = gen_D(max_n, p, gamma);
        return CoefficientTable(max_n, gen_C(max_n), std::move(p), std::move(D), std::move(gamma),
                                std::move(bern));
    }

    int max_n() const
    {
        return max_n_;
    }
    bool has_companions() const
    {
        return !D_.empty();
    }
    const std::vector<Poly> &C() const
    {
        return C_;
    }
    const std::vector<Poly> &p() const
    {
        return p_;
    }
    const std::vector<Poly> &D() const
    {
        return D_;
    }
    const std::vector<Rational> &gamma() const
    {
        return gamma_;
    }
    const std::vector<Rational> &bernoulli() const
    {
        return bernoulli_;
    }

    const Poly &C(int n) const
    {
        return at(C_, n, "C");
    }
    const Poly &p(int n) const
    {
        return at(p_, n, "p");
    }
    const Poly &D(int n) const
    {
        return at(D_, n, "D");
    }
    const Rational &gamma(int n) const
    {
        if (n < 0 || n >= static_cast<int>(gamma_.size())) {
            throw std::out_of_range("gamma_" + std::to_string(n) + " is not in the table");
        }
        return gamma_[static_cast<std::size_t>(n)];
    }

private:
    static const Poly &at(const std::vector<Poly> &v, int n, const char *name)
    {
        if (n < 0 || n >= static_cast<int>(v.size())) {
            throw std::out_of_range(std::string(name) + "_" + std::to_string(n) + " is not in the table");
        }
        return v[static_cast<std::size_t>(n)];
    }

    int max_n_;
    std::vector<Poly> C_;
    std::vector<Poly> p_;
    std::vector<Poly> D_;
    std::vector<Rational> gamma_;
    std::vector<Rational> bernoulli_;
};

// t C_n - C_n' == D_n as polynomials.
inline bool check_CD_identity(const CoefficientTable &table, int n)
{
    if (n < 0 || n > table.max_n()) {
        throw std::out_of_range("check_CD_identity: n outside the table");
    }
    const Poly &c = table.C(n);
    return c.times_t() - c.derivative() == table.D(n);
}

// C_n + t C_n' - C_n'' == t (t^2 - 2) C_{n-1} - (2t^2 - 1) C_{n-1}' + t C_{n-1}''.
inline bool check_C_recurrence(const CoefficientTable &table, int n)
{
    if (n < 1 || n > table.max_n()) {
        throw std::out_of_range("check_C_recurrence: n must lie in [1, max_n]");
    }
    const Poly &c = table.C(n);
    const Poly &q = table.C(n - 1);
    const Poly c1 = c.derivative();
    const Poly c2 = c1.derivative();
    const Poly q1 = q.derivative();
    const Poly q2 = q1.derivative();
    const Poly lhs = c + c1.times_t() - c2;
    const Poly rhs = q.times_t().times_t().times_t() - q.times_t() * Rational(2) - q1.times_t().times_t() * Rational(2)
                     + q1 + q2.times_t();
    return lhs == rhs;
}

} // namespace transit

#endif
