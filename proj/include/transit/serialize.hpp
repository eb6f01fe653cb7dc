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

#ifndef TRANSIT_SERIALIZE_HPP
#define TRANSIT_SERIALIZE_HPP

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <transit/coefficients.hpp>
#include <transit/complex.hpp>
#include <transit/expansion.hpp>
#include <transit/gaussian.hpp>
#include <transit/poly.hpp>
#include <transit/resurgence.hpp>

namespace transit
{

using json = nlohmann::ordered_json;

inline json to_json(const GaussianRational &z)
{
    return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

inline GaussianRational gaussian_from_json(const json &j)
{
    return {parse_rational(j.at("re").get<std::string>()), parse_rational(j.at("im").get<std::string>())};
}

inline json to_json(const Complex &z, int digits)
{
    return json{{"re", z.re.to_decimal(digits)}, {"im", z.im.to_decimal(digits)}, {"digits", digits}};
}

inline Complex complex_from_json(const json &j)
{
    const int digits = j.at("digits").get<int>();
    const auto bits = bits_for_digits(digits);
    return {Real(j.at("re").get<std::string>(), bits), Real(j.at("im").get<std::string>(), bits)};
}

// {"n", "degree", "coeffs": [{"k", "value"}]}, nonzero coefficients only, ascending k.
inline json poly_record(int n, const Poly &p)
{
    json coeffs = json::array();
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] != 0) {
            coeffs.push_back(json{{"k", k}, {"value", to_string(p.coeffs()[k])}});
        }
    }
    return json{{"n", n}, {"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

inline json poly_records(const std::vector<Poly> &polys)
{
    json out = json::array();
    for (std::size_t n = 0; n < polys.size(); ++n) {
        out.push_back(poly_record(static_cast<int>(n), polys[n]));
    }
    return out;
}

inline Poly poly_from_record(const json &j)
{
    const int degree = j.at("degree").get<int>();
    std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
    for (const auto &e : j.at("coeffs")) {
        const auto k = e.at("k").get<std::size_t>();
        if (k >= c.size()) {
            throw std::invalid_argument("coefficient index beyond the stated degree");
        }
        c[k] = parse_rational(e.at("value").get<std::string>());
    }
    Poly p(std::move(c));
    if (p.degree() != degree) {
        throw std::invalid_argument("stated degree does not match the coefficients");
    }
    return p;
}

inline json rational_array(const std::vector<Rational> &v)
{
    json out = json::array();
    for (const auto &q : v) {
        out.push_back(to_string(q));
    }
    return out;
}

inline void write_poly_csv(std::ostream &os, const std::vector<Poly> &polys)
{
    os << "n,k,value\n";
    for (std::size_t n = 0; n < polys.size(); ++n) {
        const auto &c = polys[n].coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] != 0) {
                os << n << ',' << k << ',' << to_string(c[k]) << '\n';
            }
        }
    }
}

inline void write_rational_csv(std::ostream &os, const std::vector<Rational> &v)
{
    os << "n,value\n";
    for (std::size_t n = 0; n < v.size(); ++n) {
        os << n << ',' << to_string(v[n]) << '\n';
    }
}

inline json to_json(const ApproxReport &r)
{
    const int d = r.digits;
    return json{{"n", r.n},
                {"tau", to_json(r.tau)},
                {"N", r.N},
                {"parity", to_string(r.parity)},
                {"exact", to_json(r.exact, d)},
                {"approx", to_json(r.approx, d)},
                {"abs_err", to_json(r.abs_err, d)},
                {"rel_err", r.rel_err.to_decimal(d)}};
}

inline void write_report_csv_header(std::ostream &os)
{
    os << "n,tau_re,tau_im,N,exact_re,exact_im,approx_re,approx_im,abs_err_re,abs_err_im,rel_err\n";
}

inline void write_report_csv_row(std::ostream &os, const ApproxReport &r)
{
    const int d = r.digits;
    os << r.n << ',' << to_string(r.tau.re) << ',' << to_string(r.tau.im) << ',' << r.N << ','
       << r.exact.re.to_decimal(d) << ',' << r.exact.im.to_decimal(d) << ',' << r.approx.re.to_decimal(d) << ','
       << r.approx.im.to_decimal(d) << ',' << r.abs_err.re.to_decimal(d) << ',' << r.abs_err.im.to_decimal(d)
       << ',' << r.rel_err.to_decimal(d) << '\n';
}

inline json to_json(const ExpansionResult &r)
{
    const int d = r.digits;
    json partials = json::array(), errors = json::array();
    for (const auto &p : r.partials) {
        partials.push_back(to_json(p, d));
    }
    for (const auto &e : r.errors_by_term) {
        errors.push_back(e.to_decimal(d));
    }
    return json{{"a", r.a},
                {"tau", to_json(r.tau)},
                {"terms", r.terms},
                {"digits", d},
                {"value", to_json(r.value, d)},
                {"oracle", to_json(r.oracle, d)},
                {"abs_err", (r.value - r.oracle).abs().to_decimal(d)},
                {"partials", std::move(partials)},
                {"errors_by_term", std::move(errors)}};
}

// Convergence table: one row per partial sum.
inline void write_expansion_csv(std::ostream &os, const ExpansionResult &r)
{
    const int d = r.digits;
    os << "term,partial_re,partial_im,abs_err\n";
    for (std::size_t k = 0; k < r.partials.size(); ++k) {
        os << k << ',' << r.partials[k].re.to_decimal(d) << ',' << r.partials[k].im.to_decimal(d) << ','
           << r.errors_by_term[k].to_decimal(d) << '\n';
    }
}

} // namespace transit

#endif
