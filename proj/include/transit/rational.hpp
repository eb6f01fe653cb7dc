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

#ifndef TRANSIT_RATIONAL_HPP
#define TRANSIT_RATIONAL_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace transit
{

// Exact rationals are GMP rationals kept in canonical form (positive
// denominator, reduced). All constructors below canonicalize.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Always "num/den", including integers ("3/1"), so the format has a single shape.
inline std::string to_string(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail
{

inline bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace detail

// Parses "p", "-p" or "p/q" (decimal digits only). Decimal points are rejected.
inline Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!detail::is_decimal_integer(num) || !detail::is_decimal_integer(den) || den.front() == '-'
        || den.front() == '+') {
        throw std::invalid_argument("not a rational 'p/q': '" + std::string(text) + "'");
    }
    const auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    Integer n(strip_plus(num), 10), d(strip_plus(den), 10);
    if (d == 0) {
        throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace transit

#endif
