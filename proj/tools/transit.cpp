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

#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include <transit/transit.hpp>

#ifndef TRANSIT_GOLDEN_FILE
#define TRANSIT_GOLDEN_FILE "data/golden_tables.json"
#endif

namespace
{

using namespace transit;

// 0 = success, 1 = numerical failure, 2 = usage error.
constexpr int exit_ok = 0;
constexpr int exit_numeric = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string path;
    std::unique_ptr<std::ofstream> file;

    std::ostream &stream()
    {
        if (path.empty() || path == "-") {
            return std::cout;
        }
        if (!file) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) {
                throw usage_error("cannot open output file '" + path + "'");
            }
        }
        return *file;
    }
};

GaussianRational parse_tau(const std::string &text)
{
    try {
        return parse_gaussian(text);
    } catch (const std::exception &e) {
        throw usage_error(std::string("--tau: ") + e.what());
    }
}

SeriesParity parse_parity(const std::string &text)
{
    return text == "odd" ? SeriesParity::odd : SeriesParity::even;
}

struct CoeffsArgs {
    int max_n = 0;
    std::string which = "C";
    std::string format = "json";
};

int run_coeffs(const CoeffsArgs &args, Output &out)
{
    if (args.max_n < 0) {
        throw usage_error("--max-n must be non-negative");
    }
    auto &os = out.stream();
    const bool csv = args.format == "csv";
    if (args.which == "gamma" || args.which == "bernoulli") {
        const auto values = args.which == "gamma" ? gen_gamma(args.max_n) : gen_bernoulli(args.max_n);
        if (csv) {
            write_rational_csv(os, values);
        } else {
            os << rational_array(values).dump(2) << '\n';
        }
        return exit_ok;
    }
    std::vector<Poly> polys;
    if (args.which == "C") {
        polys = gen_C(args.max_n);
    } else if (args.which == "p") {
        polys = gen_p(args.max_n);
    } else {
        polys = gen_D(args.max_n);
    }
    if (csv) {
        write_poly_csv(os, polys);
    } else {
        os << poly_records(polys).dump(2) << '\n';
    }
    return exit_ok;
}

struct ApproxArgs {
    long n = 0;
    std::string tau = "0";
    long N = 0;
    std::string parity = "odd";
    int digits = 60;
    std::string format = "json";
};

int run_approx(const ApproxArgs &args, Output &out)
{
    const auto tau = parse_tau(args.tau);
    if (args.n < 1 || args.N < 0 || args.N >= args.n) {
        throw usage_error("need n >= 1 and 0 <= N < n");
    }
    const PrecisionPolicy policy(args.digits);
    const auto parity = parse_parity(args.parity);
    const long top = parity == SeriesParity::odd ? 2 * args.n - 1 : 2 * args.n;
    const auto table = CoefficientTable::build(static_cast<int>(top), CoefficientTable::Contents::transition);
    const auto report = make_report(args.n, tau, args.N, parity, table, policy);
    auto &os = out.stream();
    if (args.format == "csv") {
        write_report_csv_header(os);
        write_report_csv_row(os, report);
    } else {
        os << to_json(report).dump(2) << '\n';
    }
    return exit_ok;
}

struct ApproxGammaArgs {
    long n = 0;
    long N = 0;
    std::string series = "gamma";
    int digits = 60;
};

int run_approx_gamma(const ApproxGammaArgs &args, Output &out)
{
    if (args.n < 1 || args.N < 0 || args.N >= args.n) {
        throw usage_error("need n >= 1 and 0 <= N < n");
    }
    const PrecisionPolicy policy(args.digits);
    const bool c0 = args.series == "c0";
    const int top = static_cast<int>(c0 ? 2 * args.n : 2 * args.N);
    const auto table = CoefficientTable::build(top, CoefficientTable::Contents::transition);
    const auto bits = policy.working_bits();
    const Real exact = c0 ? Real(table.C(static_cast<int>(2 * args.n)).coeff(0), bits)
                          : Real(gen_gamma(static_cast<int>(args.n)).back(), bits);
    const Real approx =
        c0 ? approx_c0_even(args.n, args.N, table, policy) : approx_gamma_n(args.n, args.N, table, policy);
    const Real err = exact - approx;
    const int d = policy.target_digits;
    json j{{"series", c0 ? "c0" : "gamma"},
           {"n", args.n},
           {"N", args.N},
           {"exact", exact.to_decimal(d)},
           {"approx", approx.to_decimal(d)},
           {"abs_err", err.to_decimal(d)},
           {"rel_err", exact.is_zero() ? std::string("0") : (abs(err) / abs(exact)).to_decimal(d)}};
    out.stream() << j.dump(2) << '\n';
    return exit_ok;
}

struct ExpandArgs {
    long a = 0;
    std::string tau = "0";
    int terms = 0;
    int digits = 60;
    std::string format = "json";
};

int run_expand(const ExpandArgs &args, Output &out)
{
    const auto tau = parse_tau(args.tau);
    if (args.a < 1) {
        throw usage_error("--a must be a positive integer");
    }
    if (args.terms < 0) {
        throw usage_error("--terms must be non-negative");
    }
    if (tau.norm() >= Rational(args.a)) {
        throw usage_error("need |tau| < sqrt(a)");
    }
    const PrecisionPolicy policy(args.digits);
    const auto table = CoefficientTable::build(args.terms, CoefficientTable::Contents::transition);
    const auto result = eval_Q_transitional(args.a, tau, args.terms, table, policy);
    auto &os = out.stream();
    if (args.format == "csv") {
        write_expansion_csv(os, result);
    } else {
        os << to_json(result).dump(2) << '\n';
    }
    return exit_ok;
}

struct ResidualArgs {
    std::string tau = "0";
    long N = 5;
    std::string parity = "odd";
    long n_min = 15;
    long n_max = 40;
    int digits = 60;
    std::string format = "json";
};

int run_residuals(const ResidualArgs &args, Output &out)
{
    const auto tau = parse_tau(args.tau);
    if (args.N < 0 || args.n_min <= args.N || args.n_max < args.n_min) {
        throw usage_error("need 0 <= N < n-min <= n-max");
    }
    const PrecisionPolicy policy(args.digits);
    const auto parity = parse_parity(args.parity);
    const auto table = CoefficientTable::build(static_cast<int>(2 * args.n_max));
    const int d = policy.target_digits;
    const Real tau_abs = sqrt(Real(tau.norm(), policy.working_bits()));
    const std::string growth = (tau_abs * tau_abs * tau_abs + Real(1, policy.working_bits())).to_decimal(d);
    auto &os = out.stream();
    if (args.format == "csv") {
        os << "n,N,parity,tau_re,tau_im,tau_growth,residual\n";
    }
    json rows = json::array();
    for (long n = args.n_min; n <= args.n_max; ++n) {
        const auto r = prop1_residual(n, args.N, tau, parity, table, policy);
        if (args.format == "csv") {
            os << n << ',' << args.N << ',' << to_string(parity) << ',' << to_string(tau.re) << ','
               << to_string(tau.im) << ',' << growth << ',' << r.to_decimal(d) << '\n';
        } else {
            rows.push_back({{"n", n}, {"residual", r.to_decimal(d)}});
        }
    }
    if (args.format != "csv") {
        os << json{{"tau", to_json(tau)}, {"N", args.N}, {"parity", to_string(parity)}, {"tau_growth", growth},
                   {"rows", std::move(rows)}}
                  .dump(2)
           << '\n';
    }
    return exit_ok;
}

struct VerifyArgs {
    int digits = min_verification_digits;
    std::string golden = TRANSIT_GOLDEN_FILE;
};

int run_verify(const VerifyArgs &args, Output &out)
{
    if (args.digits < min_verification_digits) {
        throw usage_error("--digits must be at least " + std::to_string(min_verification_digits)
                          + " for table verification");
    }
    std::vector<GoldenTable> golden;
    try {
        golden = load_golden(args.golden);
    } catch (const std::exception &e) {
        throw usage_error(std::string("golden file: ") + e.what());
    }
    const PrecisionPolicy policy(args.digits);
    const auto table = CoefficientTable::build(required_table_index(golden), CoefficientTable::Contents::transition);
    json outcomes = json::array();
    bool all_pass = true;
    for (const auto &g : golden) {
        const auto outcome = verify_table(g, table, policy);
        all_pass = all_pass && outcome.overall_pass;
        outcomes.push_back(to_json(outcome));
    }
    out.stream() << json{{"tables", std::move(outcomes)}, {"overall_pass", all_pass}}.dump(2) << '\n';
    return all_pass ? exit_ok : exit_numeric;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Transition-region coefficients of the incomplete gamma function"};
    app.require_subcommand(1);
    Output out;
    int rc = exit_ok;

    const auto add_common = [&out](CLI::App *cmd) {
        cmd->add_option("--out", out.path, "Output path (default stdout)");
    };
    const auto add_digits = [](CLI::App *cmd, int &digits) {
        cmd->add_option("--digits", digits, "Target significant digits")->check(CLI::Range(10, 100000));
    };
    const auto add_format = [](CLI::App *cmd, std::string &format) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    CoeffsArgs coeffs;
    auto *c = app.add_subcommand("coeffs", "Export exact coefficients");
    c->add_option("--max-n", coeffs.max_n, "Largest index")->required();
    c->add_option("--which", coeffs.which, "Family")->check(CLI::IsMember({"C", "p", "D", "gamma", "bernoulli"}));
    add_format(c, coeffs.format);
    add_common(c);
    c->callback([&] { rc = run_coeffs(coeffs, out); });

    ApproxArgs approx;
    auto *a = app.add_subcommand("approx", "Inverse factorial approximation of C_{2n-1} or C_{2n}");
    a->add_option("--n", approx.n, "Order n")->required();
    a->add_option("--tau", approx.tau, "Point 're' or 're,im' with rational parts")->required();
    a->add_option("--N", approx.N, "Truncation index")->required();
    a->add_option("--parity", approx.parity, "odd: C_{2n-1}, even: C_{2n}")->check(CLI::IsMember({"odd", "even"}));
    add_digits(a, approx.digits);
    add_format(a, approx.format);
    add_common(a);
    a->callback([&] { rc = run_approx(approx, out); });

    ApproxGammaArgs ag;
    auto *g = app.add_subcommand("approx-gamma", "Inverse factorial approximation of gamma_n or C_{2n}(0)");
    g->add_option("--n", ag.n, "Order n")->required();
    g->add_option("--N", ag.N, "Number of retained terms")->required();
    g->add_option("--series", ag.series, "gamma or c0")->check(CLI::IsMember({"gamma", "c0"}));
    add_digits(g, ag.digits);
    add_common(g);
    g->callback([&] { rc = run_approx_gamma(ag, out); });

    ExpandArgs ex;
    auto *e = app.add_subcommand("expand", "Evaluate the transitional expansion of Q(a, a + tau sqrt(a))");
    e->add_option("--a", ex.a, "Positive integer a")->required();
    e->add_option("--tau", ex.tau, "Point 're' or 're,im' with rational parts")->required();
    e->add_option("--terms", ex.terms, "Highest C_n index included")->required();
    add_digits(e, ex.digits);
    add_format(e, ex.format);
    add_common(e);
    e->callback([&] { rc = run_expand(ex, out); });

    ResidualArgs res;
    auto *r = app.add_subcommand("residuals", "Normalised remainders of the D_n inverse factorial series");
    r->add_option("--tau", res.tau, "Point 're' or 're,im' with rational parts");
    r->add_option("--N", res.N, "Truncation index");
    r->add_option("--parity", res.parity, "odd: D_{2n-1}, even: D_{2n}")->check(CLI::IsMember({"odd", "even"}));
    r->add_option("--n-min", res.n_min, "First n");
    r->add_option("--n-max", res.n_max, "Last n");
    add_digits(r, res.digits);
    add_format(r, res.format);
    add_common(r);
    r->callback([&] { rc = run_residuals(res, out); });

    VerifyArgs ver;
    auto *v = app.add_subcommand("verify-tables", "Recompute the published approximation tables");
    v->add_option("--digits", ver.digits, "Target significant digits (>= 120)");
    v->add_option("--golden", ver.golden, "Golden table file");
    add_common(v);
    v->callback([&] { rc = run_verify(ver, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &s) {
        return app.exit(s);
    } catch (const CLI::ParseError &err) {
        std::cerr << "error: " << err.what() << "\n\n" << app.help();
        return exit_usage;
    } catch (const usage_error &err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range &err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    } catch (const std::exception &err) {
        std::cerr << "numerical failure: " << err.what() << '\n';
        return exit_numeric;
    }
    return rc;
}
