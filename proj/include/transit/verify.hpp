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

#ifndef TRANSIT_VERIFY_HPP
#define TRANSIT_VERIFY_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <transit/coefficients.hpp>
#include <transit/gaussian.hpp>
#include <transit/resurgence.hpp>

namespace transit
{

// Precision below which the 10^53 error entries sitting under 10^75
// magnitudes are not trustworthy.
inline constexpr int min_verification_digits = 120;

// A number as printed: "±0.d1...dNeE". `im` absent for real entries.
struct PrintedComplex {
    std::string re;
    std::optional<std::string> im;
};

struct GoldenBlock {
    long n = 0;
    std::string tau_text;
    GaussianRational tau;
    long N = 0;
    PrintedComplex exact;
    PrintedComplex approx;
    PrintedComplex error;
};

struct GoldenTable {
    int table = 0;
    std::vector<GoldenBlock> blocks;

    SeriesParity parity() const
    {
        return table == 1 ? SeriesParity::odd : SeriesParity::even;
    }
};

inline std::vector<GoldenTable> parse_golden(const nlohmann::json &doc)
{
    const auto read_printed = [](const nlohmann::json &j) {
        PrintedComplex p;
        p.re = j.at("re").get<std::string>();
        if (j.contains("im")) {
            p.im = j.at("im").get<std::string>();
        }
        return p;
    };
    std::vector<GoldenTable> out;
    for (const auto &t : doc.at("tables")) {
        GoldenTable table;
        table.table = t.at("table").get<int>();
        if (table.table != 1 && table.table != 2) {
            throw std::invalid_argument("golden file: table id must be 1 or 2");
        }
        for (const auto &b : t.at("blocks")) {
            GoldenBlock block;
            block.n = b.at("n").get<long>();
            block.tau_text = b.at("tau").get<std::string>();
            block.tau = parse_gaussian(block.tau_text);
            block.N = b.at("N").get<long>();
            block.exact = read_printed(b.at("exact"));
            block.approx = read_printed(b.at("approx"));
            block.error = read_printed(b.at("error"));
            table.blocks.push_back(std::move(block));
        }
        out.push_back(std::move(table));
    }
    return out;
}

inline std::vector<GoldenTable> load_golden(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open golden file '" + path + "'");
    }
    return parse_golden(nlohmann::json::parse(in));
}

// Digit-level comparison of one printed entry against a computed value.
struct EntryCheck {
    std::string field; // e.g. "exact.re"
    std::string expected;
    std::string computed; // rounded to the printed digit count
    int printed_digits = 0;
    int matched_digits = 0; // leading significant digits that agree (0 on sign mismatch)
    bool sign_mismatch = false;
    bool pass = false;
};

struct BlockCheck {
    long n = 0;
    std::string tau;
    long N = 0;
    std::vector<EntryCheck> entries;
    bool pass = false;
};

struct VerificationOutcome {
    int table_id = 0;
    std::vector<BlockCheck> rows;
    bool overall_pass = false;
};

namespace detail
{

struct PrintedParts {
    bool negative = false;
    std::string mantissa; // significant digits after "0."
    long exponent = 0;
};

inline PrintedParts split_printed(std::string_view s)
{
    PrintedParts p;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        p.negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.substr(0, 2) != "0.") {
        throw std::invalid_argument("printed value must look like 0.ddd...eE: '" + std::string(s) + "'");
    }
    s.remove_prefix(2);
    const auto e = s.find_first_of("eE");
    p.mantissa = std::string(s.substr(0, e));
    p.exponent = e == std::string_view::npos ? 0 : std::stol(std::string(s.substr(e + 1)));
    if (p.mantissa.empty()) {
        throw std::invalid_argument("printed value has no digits");
    }
    return p;
}

// `tolerance_units` is measured in units of the last printed digit.
inline EntryCheck check_entry(std::string field, const std::string &printed, const Real &computed,
                              double tolerance_units)
{
    EntryCheck c;
    c.field = std::move(field);
    c.expected = printed;
    const auto parts = split_printed(printed);
    const int d = static_cast<int>(parts.mantissa.size());
    c.printed_digits = d;
    c.computed = computed.to_decimal(d);

    const auto bits = computed.precision();
    const Real expected(printed, bits);
    const Real unit = pow(Real(10, bits), parts.exponent - d);
    const Real diff = abs(computed - expected);
    c.sign_mismatch = computed.sign() != expected.sign();

    if (!c.sign_mismatch && !computed.is_zero()) {
        const auto got = split_printed(c.computed);
        if (got.exponent == parts.exponent) {
            while (c.matched_digits < d && got.mantissa[static_cast<std::size_t>(c.matched_digits)]
                                               == parts.mantissa[static_cast<std::size_t>(c.matched_digits)]) {
                ++c.matched_digits;
            }
        }
    }
    c.pass = !c.sign_mismatch && diff <= unit * Real(std::to_string(tolerance_units), bits);
    return c;
}

inline void check_printed(std::vector<EntryCheck> &out, const std::string &name, const PrintedComplex &printed,
                          const Complex &computed, double tolerance_units)
{
    out.push_back(check_entry(name + ".re", printed.re, computed.re, tolerance_units));
    if (printed.im) {
        out.push_back(check_entry(name + ".im", *printed.im, computed.im, tolerance_units));
    } else if (!computed.im.is_zero()) {
        EntryCheck c;
        c.field = name + ".im";
        c.expected = "0";
        c.computed = computed.im.to_decimal(6);
        out.push_back(std::move(c));
    }
}

} // namespace detail

// Recomputes every block of a golden table. Exact and approximation columns
// must round to the printed digits; error columns may differ by one unit in
// the last printed digit.
inline VerificationOutcome verify_table(const GoldenTable &golden, const CoefficientTable &table,
                                        const PrecisionPolicy &policy)
{
    if (policy.target_digits < min_verification_digits) {
        throw std::invalid_argument("table verification needs at least " + std::to_string(min_verification_digits)
                                    + " digits");
    }
    VerificationOutcome out;
    out.table_id = golden.table;
    out.overall_pass = true;
    for (const auto &b : golden.blocks) {
        const auto report = make_report(b.n, b.tau, b.N, golden.parity(), table, policy);
        BlockCheck row;
        row.n = b.n;
        row.tau = b.tau_text;
        row.N = b.N;
        detail::check_printed(row.entries, "exact", b.exact, report.exact, 0.5);
        detail::check_printed(row.entries, "approx", b.approx, report.approx, 0.5);
        detail::check_printed(row.entries, "error", b.error, report.abs_err, 1.0);
        row.pass = std::all_of(row.entries.begin(), row.entries.end(), [](const EntryCheck &e) { return e.pass; });
        out.overall_pass = out.overall_pass && row.pass;
        out.rows.push_back(std::move(row));
    }
    return out;
}

// Largest C_n index any block of the golden tables touches.
inline int required_table_index(const std::vector<GoldenTable> &tables)
{
    long top = 0;
    for (const auto &t : tables) {
        for (const auto &b : t.blocks) {
            top = std::max(top, t.table == 1 ? 2 * b.n - 1 : 2 * b.n);
        }
    }
    return static_cast<int>(top);
}

inline nlohmann::ordered_json to_json(const VerificationOutcome &o)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &r : o.rows) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto &e : r.entries) {
            entries.push_back({{"field", e.field},
                               {"expected", e.expected},
                               {"computed", e.computed},
                               {"printed_digits", e.printed_digits},
                               {"matched_digits", e.matched_digits},
                               {"sign_mismatch", e.sign_mismatch},
                               {"pass", e.pass}});
        }
        rows.push_back({{"n", r.n}, {"tau", r.tau}, {"N", r.N}, {"entries", std::move(entries)}, {"pass", r.pass}});
    }
    return {{"table_id", o.table_id}, {"rows", std::move(rows)}, {"overall_pass", o.overall_pass}};
}

} // namespace transit

#endif
