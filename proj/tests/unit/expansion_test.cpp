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

#include <vector>

#include <gtest/gtest.h>

#include <transit/expansion.hpp>

using namespace transit;

namespace
{

const CoefficientTable &table()
{
    static const CoefficientTable t = CoefficientTable::build(12, CoefficientTable::Contents::transition);
    return t;
}

} // namespace

TEST(Expansion, LeadingTermAtTransitionPoint)
{
    const PrecisionPolicy p(40);
    const auto bits = p.working_bits();
    for (long a : {1L, 7L, 1000L}) {
        const auto r = eval_Q_transitional(a, GaussianRational(0), 0, table(), p);
        const Real expected =
            Real(make_rational(1, 2), bits) - Real(1, bits) / (sqrt(pi(bits) * 2 * Real(a, bits)) * 3);
        EXPECT_LE(abs(r.value.re - expected), pow(Real(10, bits), -60));
        EXPECT_TRUE(r.value.im.is_zero());
        ASSERT_EQ(r.partials.size(), 2u);
        EXPECT_EQ(r.partials[0].re, Real(make_rational(1, 2), bits));
    }
}

TEST(Expansion, SixTermsAgreeWithOracle)
{
    const PrecisionPolicy p(60);
    const auto r = eval_Q_transitional(10000, GaussianRational(make_rational(1, 2)), 6, table(), p);
    EXPECT_LT(r.errors_by_term.back(), Real("1e-12", p.working_bits()));
    EXPECT_LT(r.errors_by_term.back(), Real("1e-20", p.working_bits()));
}

TEST(Expansion, ShapeOfResult)
{
    const PrecisionPolicy p(30);
    const auto r = eval_Q_transitional(500, GaussianRational(make_rational(1, 3), 1), 5, table(), p);
    EXPECT_EQ(r.a, 500);
    EXPECT_EQ(r.terms, 5);
    EXPECT_EQ(r.digits, 30);
    ASSERT_EQ(r.partials.size(), 7u);
    ASSERT_EQ(r.errors_by_term.size(), 7u);
    EXPECT_EQ(r.value, r.partials.back());
    for (std::size_t k = 0; k < r.partials.size(); ++k) {
        EXPECT_EQ(r.errors_by_term[k], (r.partials[k] - r.oracle).abs());
    }
}

TEST(Expansion, ZeroCoefficientsLeaveValueUnchanged)
{
    const PrecisionPolicy p(40);
    const auto r = eval_Q_transitional(10000, GaussianRational(0), 6, table(), p);
    for (int k = 1; k <= 6; ++k) {
        const bool zero = table().C(k - 1)(GaussianRational(0)) == GaussianRational(0);
        EXPECT_EQ(zero, (k - 1) % 2 == 1);
        if (zero) {
            EXPECT_EQ(r.partials[k], r.partials[k - 1]);
        } else {
            EXPECT_LT(r.errors_by_term[k], r.errors_by_term[k - 1]);
        }
    }
}

TEST(Expansion, Preconditions)
{
    const PrecisionPolicy p(20);
    EXPECT_THROW(eval_Q_transitional(0, GaussianRational(0), 1, table(), p), std::invalid_argument);
    EXPECT_THROW(eval_Q_transitional(100, GaussianRational(0), 13, table(), p), std::out_of_range);
    EXPECT_THROW(eval_Q_transitional(100, GaussianRational(0), -1, table(), p), std::out_of_range);
    EXPECT_THROW(eval_Q_transitional(100, GaussianRational(10), 1, table(), p), std::invalid_argument);
    EXPECT_THROW(eval_Q_transitional(100, GaussianRational(6, 8), 1, table(), p), std::invalid_argument);
    EXPECT_NO_THROW(eval_Q_transitional(100, GaussianRational(make_rational(99, 10)), 1, table(), p));
}

TEST(Expansion, DecayExponents)
{
    const PrecisionPolicy p(60);
    const GaussianRational tau(make_rational(1, 2));
    const auto lo = eval_Q_transitional(10000, tau, 6, table(), p);
    const auto hi = eval_Q_transitional(1000000, tau, 6, table(), p);
    const auto e = error_decay_exponent(lo, hi);
    ASSERT_EQ(e.size(), 8u);
    EXPECT_GE(e[0], 0.4);
    EXPECT_LE(e[0], 0.6);
    EXPECT_GE(e[2], 1.3);
    EXPECT_LE(e[2], 1.7);
    for (std::size_t k = 0; k < e.size(); ++k) {
        EXPECT_NEAR(e[k], (k + 1) / 2.0, 0.2) << k;
    }
    EXPECT_THROW(error_decay_exponent(lo, lo), std::invalid_argument);
    const auto shorter = eval_Q_transitional(1000000, tau, 5, table(), p);
    EXPECT_THROW(error_decay_exponent(lo, shorter), std::invalid_argument);
}

TEST(Expansion, DecayExponentRejectsUnresolvedErrors)
{
    const PrecisionPolicy p(12);
    const auto lo = eval_Q_transitional(10000, GaussianRational(0), 12, table(), p);
    const auto hi = eval_Q_transitional(1000000, GaussianRational(0), 12, table(), p);
    EXPECT_THROW(error_decay_exponent(lo, hi), std::domain_error);
}

TEST(Expansion, ErrorConstantRegression)
{
    const PrecisionPolicy p(40);
    const auto bits = p.working_bits();
    const Real K("0.5", bits);
    for (const auto &tau : {GaussianRational(0), GaussianRational(make_rational(1, 2)), GaussianRational(1),
                            GaussianRational(make_rational(-1, 2), make_rational(1, 2))}) {
        for (long a : {1000L, 10000L, 100000L, 1000000L}) {
            const auto r = eval_Q_transitional(a, tau, 6, table(), p);
            const Real root = sqrt(Real(a, bits));
            for (int terms = 0; terms <= 6; ++terms) {
                EXPECT_LE(r.errors_by_term[terms + 1], K * pow(root, -(terms + 1)))
                    << "tau=" << tau << " a=" << a << " terms=" << terms;
            }
        }
    }
}

TEST(Expansion, StableUnderDoubledDigits)
{
    const PrecisionPolicy p(30), q(60);
    const GaussianRational tau(make_rational(2, 3), make_rational(-1, 4));
    const auto r = eval_Q_transitional(2000, tau, 6, table(), p);
    const auto s = eval_Q_transitional(2000, tau, 6, table(), q);
    EXPECT_LE((r.value - s.value).abs(), pow(Real(10, q.working_bits()), -30));
}
