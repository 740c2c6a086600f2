#include "stirsum/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirsum/bernoulli.hpp"
#include "stirsum/powersum.hpp"
#include "stirsum/stirling.hpp"
#include "stirsum/verify.hpp"

namespace stirsum::cli {

namespace {

using nlohmann::ordered_json;

// binomial upper argument n + shift, rendered "n", "n+2", "n-1"
std::string binom_arg(long shift) {
    if (shift == 0) return "n";
    if (shift > 0) return "n+" + std::to_string(shift);
    return "n-" + std::to_string(-shift);
}

std::string render_expand_plain(const BinomialExpansion& e) {
    std::vector<std::string> terms;
    if (e.constant != 0) terms.push_back(to_string(e.constant));
    for (long j = 0; j <= e.k; ++j) {
        const ExactInt& c = e.coeffs[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        terms.push_back(to_string(c) + "*C(" + binom_arg(e.shift()) + "," + std::to_string(j + 1) + ")");
    }
    std::string rhs;
    for (std::size_t i = 0; i < terms.size(); ++i) rhs += (i ? " + " : "") + terms[i];
    if (rhs.empty()) rhs = "0";
    return "S_" + std::to_string(e.k) + "(n) = " + rhs;
}

std::string render_expand_latex(const BinomialExpansion& e) {
    std::vector<std::string> terms;
    if (e.constant != 0) terms.push_back(to_string(e.constant));
    for (long j = 0; j <= e.k; ++j) {
        const ExactInt& c = e.coeffs[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        std::string coeff = c == 1 ? "" : to_string(c);
        terms.push_back(coeff + "\\binom{" + binom_arg(e.shift()) + "}{" + std::to_string(j + 1) + "}");
    }
    std::string rhs;
    for (std::size_t i = 0; i < terms.size(); ++i) rhs += (i ? " + " : "") + terms[i];
    if (rhs.empty()) rhs = "0";
    return "S_{" + std::to_string(e.k) + "}(n) = " + rhs;
}

std::vector<Suite> parse_suite_list(const std::string& csv) {
    if (csv == "all") return all_suites();
    std::vector<Suite> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(parse_suite(token));
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact power sums, generalized Stirling numbers and Bernoulli machinery"};
    app.name("stirsum");
    app.require_subcommand(1);

    // ---- stirling ----
    auto* sc_stirling = app.add_subcommand("stirling", "Stirling numbers of the second kind (single value or triangle)");
    std::string st_kind = "ordinary";
    long st_k = 0, st_j = 0, st_r = 0;
    std::string st_format = "plain";
    sc_stirling->add_option("--kind", st_kind, "ordinary, r (shifted) or dual")
        ->check(CLI::IsMember({"ordinary", "r", "dual"}));
    sc_stirling->add_option("-k", st_k, "upper index")->required()->check(CLI::NonNegativeNumber);
    auto* st_j_opt = sc_stirling->add_option("-j", st_j, "lower index; omit to print the full triangle up to k")
                         ->check(CLI::NonNegativeNumber);
    auto* st_r_opt = sc_stirling->add_option("-r,--r", st_r, "shift (kinds r and dual)")->check(CLI::NonNegativeNumber);
    sc_stirling->add_option("--format", st_format, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    // ---- powersum ----
    auto* sc_powersum = app.add_subcommand("powersum", "evaluate S_k(n) = 1^k + ... + n^k by a chosen formula");
    long ps_k = 0, ps_n = 0, ps_r = 0, ps_m = 0;
    std::string ps_formula, ps_format = "plain";
    sc_powersum->add_option("-k", ps_k, "exponent")->required()->check(CLI::NonNegativeNumber);
    sc_powersum->add_option("-n", ps_n, "summation limit")->required()->check(CLI::NonNegativeNumber);
    sc_powersum->add_option("--formula", ps_formula, "brute, f1, f2, th1, th2, reqn, reqn1, negn, con1, con2, con3, harmonic")
        ->required()
        ->check(CLI::IsMember({"brute", "f1", "f2", "th1", "th2", "reqn", "reqn1", "negn", "con1",
                               "con2", "con3", "harmonic"}));
    auto* ps_r_opt = sc_powersum->add_option("-r,--r", ps_r, "shift parameter (th1, th2)")->check(CLI::NonNegativeNumber);
    auto* ps_m_opt = sc_powersum->add_option("-m,--m", ps_m, "offset parameter (con1, con2)")->check(CLI::NonNegativeNumber);
    sc_powersum->add_option("--format", ps_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    // ---- expand ----
    auto* sc_expand = app.add_subcommand("expand", "expansion of S_k(n) in the binomial basis C(n+1-r, j+1)");
    long ex_k = 0, ex_r = 1;
    std::string ex_format = "plain";
    sc_expand->add_option("-k", ex_k, "exponent")->required()->check(CLI::NonNegativeNumber);
    sc_expand->add_option("-r,--r", ex_r, "shift (default 1, the Ginsburg form)")->check(CLI::NonNegativeNumber);
    sc_expand->add_option("--format", ex_format, "plain, json or latex")
        ->check(CLI::IsMember({"plain", "json", "latex"}));

    // ---- bernoulli ----
    auto* sc_bernoulli = app.add_subcommand("bernoulli", "Bernoulli numbers and polynomials");
    sc_bernoulli->require_subcommand(1);
    long be_k = 0;
    std::string be_x, be_format = "plain";
    auto* sc_be_number = sc_bernoulli->add_subcommand("number", "B_k by the defining recurrence");
    auto* sc_be_poly = sc_bernoulli->add_subcommand("poly", "B_k(x) as a polynomial");
    auto* sc_be_eval = sc_bernoulli->add_subcommand("eval", "B_k(x) at a rational x");
    auto* sc_be_harmonic = sc_bernoulli->add_subcommand("harmonic", "B_k by the harmonic-number formula");
    for (auto* sub : {sc_be_number, sc_be_poly, sc_be_eval, sc_be_harmonic}) {
        sub->add_option("-k", be_k, "index")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--format", be_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    }
    sc_be_eval->add_option("-x", be_x, "evaluation point, decimal integer or p/q")->required();

    // ---- verify ----
    auto* sc_verify = app.add_subcommand("verify", "sweep the identity grids and report agreement");
    SuiteConfig vf_cfg;
    std::string vf_suites = "all", vf_format = "plain", vf_report_path;
    sc_verify->add_option("--kmax", vf_cfg.k_max, "largest exponent k")->check(CLI::NonNegativeNumber);
    sc_verify->add_option("--nmax", vf_cfg.n_max, "largest summation limit n")->check(CLI::NonNegativeNumber);
    sc_verify->add_option("--rmax", vf_cfg.r_max, "largest shift r")->check(CLI::NonNegativeNumber);
    sc_verify->add_option("--mmax", vf_cfg.m_max, "largest offset m")->check(CLI::NonNegativeNumber);
    sc_verify->add_option("--suites", vf_suites, "comma-separated suite names, or 'all'");
    sc_verify->add_option("--jobs", vf_cfg.parallelism, "worker threads (0 = all, 1 = serial)")
        ->check(CLI::NonNegativeNumber);
    sc_verify->add_option("--format", vf_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    sc_verify->add_option("--report", vf_report_path, "write the report to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_stirling->parsed()) {
            if (st_kind == "ordinary" && *st_r_opt) {
                err << "error: --r applies only to kinds r and dual\n";
                return 2;
            }
            StirlingKind kind{StirlingVariant::Ordinary, 0};
            if (st_kind == "r") kind = {StirlingVariant::RShifted, st_r};
            if (st_kind == "dual") kind = {StirlingVariant::Dual, st_r};
            if (*st_j_opt) {
                if (st_format == "csv") {
                    err << "error: csv output is for triangles; omit -j\n";
                    return 2;
                }
                ExactInt v;
                if (st_kind == "ordinary") v = stirling2(st_k, st_j);
                else if (st_kind == "r") v = r_stirling(st_k, st_j, st_r);
                else v = dual_r_stirling(st_k, st_j, st_r);
                if (st_format == "json") {
                    ordered_json j{{"kind", st_kind}, {"k", st_k}, {"j", st_j}};
                    if (st_kind != "ordinary") j["r"] = st_r;
                    j["value"] = to_string(v);
                    out << j.dump() << "\n";
                } else {
                    out << to_string(v) << "\n";
                }
                return 0;
            }
            StirlingTable table(kind, st_k);
            if (st_format == "csv") {
                out << "k,j,value\n";
                for (long k = 0; k <= st_k; ++k)
                    for (long j = 0; j <= k; ++j)
                        out << k << "," << j << "," << to_string(table.at(k, j)) << "\n";
            } else if (st_format == "json") {
                ordered_json jt{{"kind", st_kind}};
                if (st_kind != "ordinary") jt["r"] = st_r;
                jt["max_k"] = st_k;
                auto entries = ordered_json::array();
                for (long k = 0; k <= st_k; ++k)
                    for (long j = 0; j <= k; ++j)
                        entries.push_back(ordered_json{{"k", k}, {"j", j}, {"value", to_string(table.at(k, j))}});
                jt["entries"] = entries;
                out << jt.dump() << "\n";
            } else {
                for (long k = 0; k <= st_k; ++k) {
                    for (long j = 0; j <= k; ++j) out << (j ? " " : "") << to_string(table.at(k, j));
                    out << "\n";
                }
            }
            return 0;
        }

        if (sc_powersum->parsed()) {
            Formula f = parse_formula(ps_formula);
            if (formula_takes_r(f) && !*ps_r_opt) {
                err << "error: formula '" << ps_formula << "' requires --r\n";
                return 2;
            }
            if (!formula_takes_r(f) && *ps_r_opt) {
                err << "error: formula '" << ps_formula << "' takes no --r\n";
                return 2;
            }
            if (formula_takes_m(f) && !*ps_m_opt) {
                err << "error: formula '" << ps_formula << "' requires --m\n";
                return 2;
            }
            if (!formula_takes_m(f) && *ps_m_opt) {
                err << "error: formula '" << ps_formula << "' takes no --m\n";
                return 2;
            }
            FormulaId id{f, formula_takes_r(f) ? ps_r : ps_m};
            ExactInt v = powersum(id, ps_k, ps_n);
            if (ps_format == "json") {
                ordered_json j{{"formula", ps_formula}, {"k", ps_k}, {"n", ps_n}};
                if (formula_takes_r(f)) j["r"] = ps_r;
                if (formula_takes_m(f)) j["m"] = ps_m;
                j["value"] = to_string(v);
                out << j.dump() << "\n";
            } else {
                out << to_string(v) << "\n";
            }
            return 0;
        }

        if (sc_expand->parsed()) {
            BinomialExpansion e = expand_binomial_basis(ex_k, ex_r);
            if (ex_format == "json") {
                auto coeffs = ordered_json::array();
                for (const auto& c : e.coeffs) coeffs.push_back(to_string(c));
                ordered_json j{{"k", e.k},
                               {"r", e.r},
                               {"constant", to_string(e.constant)},
                               {"shift", e.shift()},
                               {"coefficients", coeffs}};
                out << j.dump() << "\n";
            } else if (ex_format == "latex") {
                out << render_expand_latex(e) << "\n";
            } else {
                out << render_expand_plain(e) << "\n";
            }
            return 0;
        }

        if (sc_bernoulli->parsed()) {
            std::string mode;
            ExactRat value;
            ExactRat x;
            if (sc_be_number->parsed()) {
                mode = "number";
                value = bernoulli_number(be_k);
            } else if (sc_be_harmonic->parsed()) {
                mode = "harmonic";
                value = bernoulli_number_harmonic(be_k);
            } else if (sc_be_eval->parsed()) {
                mode = "eval";
                try {
                    x = ExactRat::parse(be_x);
                } catch (const std::domain_error& e) {
                    err << "error: bad -x value: " << e.what() << "\n";
                    return 2;
                }
                value = bernoulli_poly(be_k).eval(x);
            } else {
                mode = "poly";
            }
            if (mode == "poly") {
                Polynomial p = bernoulli_poly(be_k);
                if (be_format == "json") {
                    auto coeffs = ordered_json::array();
                    for (long i = 0; i <= p.degree(); ++i)
                        coeffs.push_back(p.coeff(static_cast<std::size_t>(i)).str());
                    out << ordered_json{{"mode", "poly"}, {"k", be_k}, {"coefficients", coeffs}}.dump() << "\n";
                } else {
                    out << p.str() << "\n";
                }
                return 0;
            }
            if (be_format == "json") {
                ordered_json j{{"mode", mode}, {"k", be_k}};
                if (mode == "eval") j["x"] = x.str();
                j["value"] = value.str();
                out << j.dump() << "\n";
            } else {
                out << value.str() << "\n";
            }
            return 0;
        }

        if (sc_verify->parsed()) {
            try {
                vf_cfg.suites = parse_suite_list(vf_suites);
            } catch (const std::domain_error& e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
            SuiteReport report = run_suites(vf_cfg);
            std::string rendered = vf_format == "json" ? report.to_json() : report.to_text();
            if (!vf_report_path.empty()) {
                std::ofstream file(vf_report_path);
                if (!file) {
                    err << "error: cannot write report to '" << vf_report_path << "'\n";
                    return 1;
                }
                file << rendered;
                if (!file.good()) {
                    err << "error: short write to '" << vf_report_path << "'\n";
                    return 1;
                }
            } else {
                out << rendered;
            }
            return report.overall_pass ? 0 : 1;
        }

        err << "error: no subcommand\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("stirsum");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace stirsum::cli
