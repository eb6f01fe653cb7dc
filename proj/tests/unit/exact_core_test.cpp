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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <transit/coefficients.hpp>
#include <transit/gaussian.hpp>
#include <transit/poly.hpp>
#include <transit/rational.hpp>
#include <transit/series.hpp>

using namespace transit;

namespace
{

Rational q(long n, long d = 1)
{
    return make_rational(n, d);
}

// Small random rationals and polynomials for the algebraic properties.
struct Gen {
    std::mt19937_64 rng{20240331};

    Rational rational()
    {
        std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
        return q(num(rng), den(rng));
    }
    GaussianRational point()
    {
        return {rational(), rational()};
    }
    Poly poly(int max_degree)
    {
        std::uniform_int_distribution<int> deg(-1, max_degree);
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
        for (auto &x : c) {
            x = rational();
        }
        return Poly(std::move(c));
    }
};

} // namespace

TEST(Rational, CanonicalStringsRoundTrip)
{
    EXPECT_EQ(to_string(q(2, -6)), "-1/3");
    EXPECT_EQ(to_string(q(3)), "3/1");
    EXPECT_EQ(parse_rational("-4/6"), q(-2, 3));
    EXPECT_EQ(parse_rational("7"), q(7));
    EXPECT_EQ(parse_rational("+5/10"), q(1, 2));
    Gen g;
    for (int i = 0; i < 50; ++i) {
        const Rational x = g.rational();
        EXPECT_EQ(parse_rational(to_string(x)), x);
    }
}

TEST(Rational, RejectsMalformedInput)
{
    EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::domain_error);
}

TEST(GaussianRational, FieldArithmetic)
{
    const GaussianRational z(q(1), q(3, 2));
    EXPECT_EQ(z.norm(), q(13, 4));
    EXPECT_EQ(z * z.conj(), GaussianRational(q(13, 4)));
    EXPECT_EQ((z / z), GaussianRational(1));
    EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
    EXPECT_THROW(z / GaussianRational(0), std::domain_error);
    EXPECT_EQ(parse_gaussian("1,3/2"), z);
    EXPECT_EQ(parse_gaussian("-1/2"), GaussianRational(q(-1, 2)));
}

TEST(Poly, DegreeAndParityMetadata)
{
    const Poly zero;
    EXPECT_EQ(zero.degree(), -1);
    EXPECT_TRUE(zero.is_zero());
    const Poly c0{q(-1, 3), q(0), q(1, 3)};
    EXPECT_EQ(c0.degree(), 2);
    EXPECT_EQ(c0.parity(), Parity::even);
    const Poly odd{q(0), q(1), q(0), q(2)};
    EXPECT_EQ(odd.parity(), Parity::odd);
    EXPECT_EQ(Poly({q(1), q(1)}).parity(), Parity::none);
    // Trailing zeros are trimmed.
    EXPECT_EQ(Poly({q(1), q(0), q(0)}).degree(), 0);
}

TEST(Poly, DerivativeExamples)
{
    const Poly c0{q(-1, 3), q(0), q(1, 3)};
    EXPECT_EQ(c0.derivative(), Poly({q(0), q(2, 3)}));
    EXPECT_TRUE(Poly(q(-1, 3)).derivative().is_zero());

    const Poly c1{q(0), q(1, 12), q(0), q(-11, 36), q(0), q(1, 18)};
    const Poly d = c1.derivative();
    EXPECT_EQ(d, Poly({q(1, 12), q(0), q(-11, 12), q(0), q(5, 18)}));
    EXPECT_EQ(d.degree(), c1.degree() - 1);
    EXPECT_EQ(d.parity(), Parity::even);
}

TEST(Poly, ExactEvaluationExamples)
{
    const Poly c0{q(-1, 3), q(0), q(1, 3)};
    EXPECT_EQ(c0(GaussianRational(1)), GaussianRational(0));
    EXPECT_EQ(c0(GaussianRational(q(1, 2))), GaussianRational(q(-1, 4)));
    EXPECT_EQ(c0(GaussianRational::i()), GaussianRational(q(-2, 3)));
    EXPECT_EQ(c0(q(1, 2)), q(-1, 4));
}

TEST(Poly, EvaluationIsMultiplicative)
{
    Gen g;
    for (int i = 0; i < 100; ++i) {
        const Poly a = g.poly(7), b = g.poly(7);
        const GaussianRational z = g.point();
        EXPECT_EQ((a * b)(z), a(z) * b(z));
        EXPECT_EQ((a + b)(z), a(z) + b(z));
    }
}

TEST(Poly, DerivativeFlipsParityAndDropsDegree)
{
    Gen g;
    for (int i = 0; i < 50; ++i) {
        const Poly p = g.poly(9);
        if (p.degree() < 1) {
            continue;
        }
        EXPECT_EQ(p.derivative().degree(), p.degree() - 1);
        // Product rule as an exact identity.
        const Poly r = g.poly(5);
        EXPECT_EQ((p * r).derivative(), p.derivative() * r + p * r.derivative());
    }
}

TEST(SeriesExp, ZeroSeriesGivesOne)
{
    const std::vector<Poly> f(5);
    const auto e = series_exp(f, 5);
    ASSERT_EQ(e.size(), 6u);
    EXPECT_EQ(e[0], Poly(q(1)));
    for (int n = 1; n <= 5; ++n) {
        EXPECT_TRUE(e[static_cast<std::size_t>(n)].is_zero());
    }
}

TEST(SeriesExp, FirstOrdersOfTheLogSeries)
{
    const std::vector<Poly> f{log_series_term(1), log_series_term(2)};
    EXPECT_EQ(f[0], Poly({q(0), q(-1), q(0), q(1, 3)}));
    EXPECT_EQ(f[1], Poly({q(0), q(0), q(1, 2), q(0), q(-1, 4)}));
    const auto e = series_exp(f, 2);
    EXPECT_EQ(e[1], Poly({q(0), q(-1), q(0), q(1, 3)}));
    EXPECT_EQ(e[2], Poly({q(0), q(0), q(1), q(0), q(-7, 12), q(0), q(1, 18)}));
}

TEST(SeriesExp, ScalarCoefficientsMatchExpOfX)
{
    // exp(x) = sum x^n / n!
    const std::vector<Rational> f{q(1)};
    const auto e = series_exp(f, 8);
    Integer fact(1);
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) {
            fact *= n;
        }
        EXPECT_EQ(e[static_cast<std::size_t>(n)], Rational(Integer(1), fact));
    }
    EXPECT_THROW(series_exp(f, -1), std::invalid_argument);
}

TEST(SeriesExp, ExpOfMinusFIsTheInverse)
{
    Gen g;
    const int max_n = 8;
    std::vector<Poly> f, minus_f;
    for (int k = 1; k <= max_n; ++k) {
        f.push_back(g.poly(4));
        minus_f.push_back(-f.back());
    }
    const auto a = series_exp(f, max_n), b = series_exp(minus_f, max_n);
    for (int n = 0; n <= max_n; ++n) {
        Poly conv;
        for (int k = 0; k <= n; ++k) {
            conv += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
        }
        EXPECT_EQ(conv, n == 0 ? Poly(q(1)) : Poly()) << "order " << n;
    }
}

TEST(SeriesExp, DegreesOfTheLogSeriesExponential)
{
    const auto p = gen_p(30);
    for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(p[static_cast<std::size_t>(n)].degree(), 3 * n);
    }
}
