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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <transit/transit.hpp>

using namespace transit;

namespace
{

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Context {
    CoefficientTable transition = CoefficientTable::build(200, CoefficientTable::Contents::transition);
    CoefficientTable full = CoefficientTable::build(100);
    std::vector<GoldenTable> golden = load_golden(TRANSIT_GOLDEN_FILE);
};

std::string label(const GaussianRational &tau)
{
    return tau.im == 0 ? tau.re.get_str() : tau.re.get_str() + "+" + tau.im.get_str() + "i";
}

std::string describe_failures(const VerificationOutcome &o)
{
    std::ostringstream os;
    int checked = 0, failed = 0;
    for (const auto &row : o.rows) {
        for (const auto &e : row.entries) {
            ++checked;
            if (!e.pass) {
                ++failed;
                os << "; n=" << row.n << " tau=" << row.tau << " N=" << row.N << " " << e.field << " printed "
                   << e.expected << " computed " << e.computed << (e.sign_mismatch ? " (sign)" : "");
            }
        }
    }
    return std::to_string(checked - failed) + "/" + std::to_string(checked) + " printed entries match" + os.str();
}

Verdict table_reproduction(const Context &ctx, int id)
{
    const PrecisionPolicy policy(min_verification_digits);
    for (const auto &g : ctx.golden) {
        if (g.table == id) {
            const auto outcome = verify_table(g, ctx.transition, policy);
            return {outcome.overall_pass, describe_failures(outcome)};
        }
    }
    return {false, "table missing from golden file"};
}

Verdict identities(const Context &ctx)
{
    int bad = 0;
    for (int n = 0; n <= 100; ++n) {
        bad += !check_CD_identity(ctx.full, n);
        if (n >= 1) {
            bad += !check_C_recurrence(ctx.full, n);
        }
    }
    return {bad == 0, "101 companion identities, 100 recurrence identities, " + std::to_string(bad) + " failures"};
}

Verdict stirling(const Context &ctx)
{
    const std::vector<Rational> printed = {make_rational(1), make_rational(-1, 12), make_rational(1, 288),
                                           make_rational(139, 51840), make_rational(-571, 2488320)};
    bool ok = true;
    for (int n = 0; n < 5; ++n) {
        ok = ok && ctx.full.gamma(n) == printed[static_cast<std::size_t>(n)];
    }
    const auto gamma = gen_gamma(200);
    const PrecisionPolicy policy(50);
    const auto bits = policy.working_bits();
    const Real margin = Real(1, bits) - pow(Real(10, bits), -50);
    int violations = 0;
    Real tightest(2, bits);
    for (long n = 1; n <= 200; ++n) {
        const Real lhs = abs(Real(gamma[static_cast<std::size_t>(n)], bits));
        const Real rhs = factorial_scale(n, policy);
        violations += !(lhs <= rhs * margin);
        tightest = std::min(tightest, (rhs - lhs) / rhs);
    }
    return {ok && violations == 0, std::string("gamma_0..gamma_4 ") + (ok ? "exact" : "MISMATCH")
                                       + "; bound violations " + std::to_string(violations)
                                       + "/200, smallest relative slack " + tightest.to_decimal(3)};
}

Verdict p_growth_bound(const Context &ctx)
{
    const PrecisionPolicy policy(50);
    const auto bits = policy.working_bits();
    const Real margin = Real(1, bits) - pow(Real(10, bits), -50);
    const std::vector<GaussianRational> taus = {
        GaussianRational(0),         GaussianRational(make_rational(1, 2)), GaussianRational(make_rational(-1, 2)),
        GaussianRational(1),         GaussianRational(-1),                  GaussianRational(2),
        GaussianRational(-2),        GaussianRational(0, 1),                GaussianRational(1, 1),
        GaussianRational(2, 1),      GaussianRational(1, make_rational(3, 2))};
    int checked = 0, violations = 0;
    for (const auto &tau : taus) {
        const Real r = sqrt(Real(tau.norm(), bits));
        const Real base = r * r * r + Real(1, bits);
        for (int k = 0; k <= 60; ++k) {
            const Real lhs = sqrt(Real(ctx.full.p(k)(tau).norm(), bits));
            const Real rhs = pow(base, k) * 4;
            ++checked;
            violations += !(lhs <= rhs * margin);
        }
    }
    return {violations == 0,
            std::to_string(checked) + " (tau, k) pairs, " + std::to_string(violations) + " violations"};
}

Verdict structure(const Context &ctx)
{
    int bad = 0;
    for (int n = 0; n <= 100; ++n) {
        const Poly &c = ctx.full.C(n);
        const Parity want = n % 2 == 0 ? Parity::even : Parity::odd;
        Integer denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 3, static_cast<unsigned long>(n + 1));
        denom *= factorial(static_cast<unsigned long>(n + 1));
        bad += c.degree() != 3 * n + 2;
        bad += c.parity() != want;
        bad += n % 2 == 1 && c.coeff(0) != 0;
        bad += c.leading() != Rational(Integer(1), denom);
    }
    return {bad == 0, "C_0..C_100, " + std::to_string(bad) + " failures"};
}

Verdict self_consistency(const Context &ctx)
{
    const PrecisionPolicy policy(60);
    const auto bits = policy.working_bits();

    const Real gamma40(ctx.full.gamma(40), bits);
    const Real g_err = abs(approx_gamma_n(40, 8, ctx.full, policy) - gamma40) / abs(gamma40);
    long k = 8;
    while (sin_half_pi(40 - k) == 0) {
        ++k;
    }
    const Real g_omit =
        abs(inverse_factorial_term(40, k, Real(ctx.full.gamma(static_cast<int>(k)), bits), policy)) / abs(gamma40);

    const Real c60(ctx.full.C(60).coeff(0), bits);
    const Real c_err = abs(approx_c0_even(30, 6, ctx.full, policy) - c60) / abs(c60);
    long j = 6;
    while (sin_half_pi(30 - j) == 0) {
        ++j;
    }
    const Real c_omit =
        abs(inverse_factorial_term(30, j, Real(ctx.full.C(static_cast<int>(2 * j)).coeff(0), bits), policy)) / abs(c60);

    const bool ok = g_err <= g_omit * 2 && c_err <= c_omit * 2;
    return {ok, "gamma_40 rel err " + g_err.to_decimal(3) + " vs 2x omitted term (k=" + std::to_string(k) + ") "
                    + (g_omit * 2).to_decimal(3) + "; C_60(0) rel err " + c_err.to_decimal(3)
                    + " vs 2x omitted term (k=" + std::to_string(j) + ") " + (c_omit * 2).to_decimal(3)};
}

Verdict expansion_decay(const Context &ctx)
{
    const PrecisionPolicy policy(60);
    std::ostringstream os;
    bool ok = true;
    for (const auto &tau : {GaussianRational(0), GaussianRational(make_rational(1, 2))}) {
        const auto lo = eval_Q_transitional(10000, tau, 6, ctx.transition, policy);
        const auto hi = eval_Q_transitional(1000000, tau, 6, ctx.transition, policy);
        const auto e = error_decay_exponent(lo, hi);
        os << "tau=" << label(tau) << " exponents";
        for (std::size_t k : {0u, 2u, 4u}) {
            const double want = (static_cast<double>(k) + 1) / 2;
            ok = ok && std::abs(e[k] - want) <= 0.2;
            char buf[32];
            std::snprintf(buf, sizeof buf, " k%zu=%.4f", k, e[k]);
            os << buf;
        }
        os << "; ";
    }
    const auto r = eval_Q_transitional(10000, GaussianRational(make_rational(1, 2)), 6, ctx.transition, policy);
    const Real err = (r.value - r.oracle).abs();
    ok = ok && err < Real("1e-12", policy.working_bits());
    os << "|value - oracle| at a=10^4, tau=1/2, 6 terms: " << err.to_decimal(3);
    return {ok, os.str()};
}

Verdict residuals(const Context &ctx)
{
    const PrecisionPolicy policy(40);
    std::ostringstream os;
    bool ok = true;
    for (const auto &tau : {GaussianRational(0), GaussianRational(make_rational(1, 2)), GaussianRational(1)}) {
        for (auto parity : {SeriesParity::odd, SeriesParity::even}) {
            std::vector<Real> r;
            for (long n = 15; n <= 40; ++n) {
                r.push_back(prop1_residual(n, 5, tau, parity, ctx.full, policy));
            }
            auto sorted = r;
            std::sort(sorted.begin(), sorted.end());
            const Real median = (sorted[12] + sorted[13]) / 2;
            const bool within = sorted.back() <= median * 10 && sorted.front() * 10 >= median;
            ok = ok && within;
            os << (os.tellp() > 0 ? "; " : "") << "tau=" << label(tau) << " " << to_string(parity) << ": min "
               << sorted.front().to_decimal(3) << " median " << median.to_decimal(3) << " max "
               << sorted.back().to_decimal(3) << (within ? "" : " (outside)");
        }
    }
    return {ok, os.str()};
}

Verdict leading_absence(const Context &)
{
    const PrecisionPolicy policy(30);
    int nonzero = 0;
    for (const auto &tau : {GaussianRational(make_rational(1, 2)), GaussianRational(1, make_rational(3, 2)),
                            GaussianRational(2, 1)}) {
        for (long n = 2; n <= 100; n += 2) {
            nonzero += !odd_leading_term(n, tau, policy).is_zero();
        }
    }
    return {nonzero == 0,
            "even n in 2..100 at three tau values, " + std::to_string(nonzero) + " nonzero leading terms"};
}

} // namespace

int main()
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const Context ctx;

    const std::vector<std::pair<std::string, std::function<Verdict(const Context &)>>> criteria = {
        {"reference table 1 reproduction", [](const Context &c) { return table_reproduction(c, 1); }},
        {"reference table 2 reproduction", [](const Context &c) { return table_reproduction(c, 2); }},
        {"exact identity suite", identities},
        {"Stirling validation", stirling},
        {"bound on p_k", p_growth_bound},
        {"structural invariants", structure},
        {"resurgence self-consistency", self_consistency},
        {"expansion decay", expansion_decay},
        {"companion residuals bounded", residuals},
        {"leading-term absence", leading_absence},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second(ctx);
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << " (" << criteria[i].first
                  << "): " << v.detail << std::endl;
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed in " << seconds << " s" << std::endl;
    return failures == 0 ? 0 : 1;
}
