#include "stirsum/verify.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "stirsum/bernoulli.hpp"
#include "stirsum/polynomial.hpp"
#include "stirsum/powersum.hpp"
#include "stirsum/stirling.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stirsum {

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = {
        Suite::FormulaAgreement, Suite::StirlingDuality, Suite::NewtonGregory,
        Suite::Bernoulli,        Suite::Con3Identity,    Suite::Symmetry,
    };
    return suites;
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::FormulaAgreement: return "formula-agreement";
        case Suite::StirlingDuality: return "stirling-duality";
        case Suite::NewtonGregory: return "newton-gregory";
        case Suite::Bernoulli: return "bernoulli";
        case Suite::Con3Identity: return "con3-identity";
        case Suite::Symmetry: return "symmetry";
    }
    throw std::logic_error("suite_name: bad enum");
}

Suite parse_suite(const std::string& name) {
    for (Suite s : all_suites())
        if (suite_name(s) == name) return s;
    throw std::domain_error("unknown suite '" + name +
                            "' (expected formula-agreement, stirling-duality, newton-gregory, "
                            "bernoulli, con3-identity or symmetry)");
}

namespace {

// String equality doubles as value equality: every value printed here is in
// canonical form.
CaseOutcome compare(const std::string& expected, const std::string& actual) {
    return {expected == actual, expected, actual};
}

CaseOutcome compare(const ExactInt& expected, const ExactInt& actual) {
    return compare(to_string(expected), to_string(actual));
}

CaseOutcome compare(const ExactRat& expected, const ExactRat& actual) {
    return compare(expected.str(), actual.str());
}

CaseOutcome compare(const Polynomial& expected, const Polynomial& actual) {
    return compare(expected.str(), actual.str());
}

std::string kv(const char* key, long v) { return std::string(key) + "=" + std::to_string(v); }

// Weighted-sum route for {k j}_(+/-r): sum_i (+/-1)^i C(k,i) {k-i j} r^i.
// Kept here, independent of the alternating-sum route in stirling.cpp.
ExactInt weighted_stirling(long k, long j, long r, bool dual) {
    ExactInt sum = 0;
    for (long i = 0; i <= k - j; ++i) {
        ExactInt term = binomial(k, i) * stirling2(k - i, j) * pow_int(ExactInt(r), static_cast<unsigned long>(i));
        if (dual && i % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

const std::vector<ExactRat>& rational_spots() {
    static const std::vector<ExactRat> spots = {ExactRat(1, 2), ExactRat(-3, 2), ExactRat(7, 3)};
    return spots;
}

void add_formula_agreement(std::vector<Case>& cases, const SuiteConfig& cfg) {
    const Suite S = Suite::FormulaAgreement;
    auto add = [&](std::string params, std::function<CaseOutcome()> run) {
        cases.push_back({S, std::move(params), std::move(run)});
    };
    for (long k = 0; k <= cfg.k_max; ++k) {
        for (long n = 0; n <= cfg.n_max; ++n) {
            add("formula=f1 " + kv("k", k) + " " + kv("n", n),
                [k, n] { return compare(powersum_brute(k, n), powersum_f1(k, n)); });
            add("formula=f2 " + kv("k", k) + " " + kv("n", n),
                [k, n] { return compare(powersum_brute(k, n), powersum_f2(k, n)); });
            for (long r = 0; r <= cfg.r_max; ++r) {
                add("formula=th1 " + kv("k", k) + " " + kv("n", n) + " " + kv("r", r),
                    [k, n, r] { return compare(powersum_brute(k, n), powersum_th1(k, n, r)); });
                add("formula=th2 " + kv("k", k) + " " + kv("n", n) + " " + kv("r", r),
                    [k, n, r] { return compare(powersum_brute(k, n), powersum_th2(k, n, r)); });
            }
            add("formula=reqn " + kv("k", k) + " " + kv("n", n),
                [k, n] { return compare(powersum_brute(k, n), powersum_special(k, n, Formula::Reqn)); });
            add("formula=reqn1 " + kv("k", k) + " " + kv("n", n),
                [k, n] { return compare(powersum_brute(k, n), powersum_special(k, n, Formula::Reqn1)); });
            add("formula=negn " + kv("k", k) + " " + kv("n", n),
                [k, n] { return compare(powersum_brute(k, n), powersum_special(k, n, Formula::NegN)); });
            for (long m = 0; m <= cfg.m_max; ++m)
                add("formula=con1 " + kv("k", k) + " " + kv("m", m) + " " + kv("n", n),
                    [k, n, m] { return compare(powersum_brute(k, n), powersum_con1(k, n, m)); });
            for (long m = 0; m <= std::min(cfg.m_max, n); ++m)
                add("formula=con2 " + kv("k", k) + " " + kv("m", m) + " " + kv("n", n),
                    [k, n, m] { return compare(powersum_brute(k, n), powersum_con2(k, n, m)); });
            add("formula=con3 " + kv("k", k) + " " + kv("n", n),
                [k, n] { return compare(powersum_brute(k, n), powersum_con3(k, n)); });
            add("formula=harmonic " + kv("k", k) + " " + kv("n", n),
                [k, n] { return compare(powersum_brute(k, n), powersum_harmonic(k + 1, n)); });
        }
        for (long r = 0; r <= cfg.r_max; ++r) {
            add("check=r-minus-1 " + kv("k", k) + " " + kv("r", r), [k, r] {
                ExactInt expected = r >= 1 ? powersum_brute(k, r - 1) : ExactInt(k == 0 ? -1 : 0);
                return compare(expected, powersum_r_minus1(k, r));
            });
            // (-1)^k S_k(r) = -delta_{k,0} + sum_j j! C(r+1, j+1) {k j}_{-r}
            add("check=rah3 " + kv("k", k) + " " + kv("r", r), [k, r] {
                ExactInt rhs = k == 0 ? -1 : 0;
                for (long j = 0; j <= k; ++j)
                    rhs += factorial(j) * binomial(r + 1, j + 1) * dual_r_stirling(k, j, r);
                ExactInt lhs = powersum_brute(k, r);
                if (k % 2 == 1) lhs = -lhs;
                return compare(lhs, rhs);
            });
        }
    }
}

void add_stirling_duality(std::vector<Case>& cases, const SuiteConfig& cfg) {
    const Suite S = Suite::StirlingDuality;
    auto add = [&](std::string params, std::function<CaseOutcome()> run) {
        cases.push_back({S, std::move(params), std::move(run)});
    };
    for (long k = 0; k <= cfg.k_max; ++k) {
        for (long j = 0; j <= k; ++j) {
            for (long r = 0; r <= cfg.r_max; ++r) {
                add("check=alt-vs-weighted kind=r " + kv("k", k) + " " + kv("j", j) + " " + kv("r", r),
                    [k, j, r] { return compare(weighted_stirling(k, j, r, false), r_stirling(k, j, r)); });
                add("check=alt-vs-weighted kind=dual " + kv("k", k) + " " + kv("j", j) + " " + kv("r", r),
                    [k, j, r] { return compare(weighted_stirling(k, j, r, true), dual_r_stirling(k, j, r)); });
                // {k j}_{-r} = (-1)^(k-j) {k j}_{r-j}; for r < j the right side
                // is read as the polynomial value R_{k,j}(r-j).
                add("check=duality " + kv("k", k) + " " + kv("j", j) + " " + kv("r", r), [k, j, r] {
                    ExactRat rhs = r >= j ? ExactRat(r_stirling(k, j, r - j))
                                          : eval_stirling_poly(k, j, ExactRat(r - j));
                    if ((k - j) % 2 == 1) rhs = -rhs;
                    return compare(rhs, ExactRat(dual_r_stirling(k, j, r)));
                });
            }
            add("check=poly-at-0 " + kv("k", k) + " " + kv("j", j),
                [k, j] { return compare(ExactRat(stirling2(k, j)), stirling_poly(k, j).eval(ExactRat(0))); });
            add("check=poly-at-1 " + kv("k", k) + " " + kv("j", j),
                [k, j] { return compare(ExactRat(stirling2(k + 1, j + 1)), stirling_poly(k, j).eval(ExactRat(1))); });
        }
        // table rows against the per-entry functions
        add("check=table kind=ordinary " + kv("k", k), [k, kmax = cfg.k_max] {
            StirlingTable table({StirlingVariant::Ordinary, 0}, kmax);
            for (long j = 0; j <= k; ++j)
                if (table.at(k, j) != stirling2(k, j))
                    return compare(to_string(stirling2(k, j)), to_string(table.at(k, j)) + " at " + kv("j", j));
            return compare(std::string("row-matches"), std::string("row-matches"));
        });
        for (long r = 0; r <= cfg.r_max; ++r) {
            add("check=table kind=r " + kv("k", k) + " " + kv("r", r), [k, r, kmax = cfg.k_max] {
                StirlingTable table({StirlingVariant::RShifted, r}, kmax);
                for (long j = 0; j <= k; ++j)
                    if (table.at(k, j) != r_stirling(k, j, r))
                        return compare(to_string(r_stirling(k, j, r)), to_string(table.at(k, j)) + " at " + kv("j", j));
                return compare(std::string("row-matches"), std::string("row-matches"));
            });
            add("check=table kind=dual " + kv("k", k) + " " + kv("r", r), [k, r, kmax = cfg.k_max] {
                StirlingTable table({StirlingVariant::Dual, r}, kmax);
                for (long j = 0; j <= k; ++j)
                    if (table.at(k, j) != dual_r_stirling(k, j, r))
                        return compare(to_string(dual_r_stirling(k, j, r)), to_string(table.at(k, j)) + " at " + kv("j", j));
                return compare(std::string("row-matches"), std::string("row-matches"));
            });
        }
    }
}

void add_newton_gregory(std::vector<Case>& cases, const SuiteConfig& cfg) {
    const Suite S = Suite::NewtonGregory;
    auto add = [&](std::string params, std::function<CaseOutcome()> run) {
        cases.push_back({S, std::move(params), std::move(run)});
    };
    static const std::vector<ExactRat> anchors = {ExactRat(0), ExactRat(1), ExactRat(-2), ExactRat(5, 2)};
    for (long k = 0; k <= cfg.k_max; ++k) {
        for (const ExactRat& a : anchors) {
            add("check=roundtrip-powersum " + kv("k", k) + " a=" + a.str(), [k, a] {
                Polynomial p = powersum_poly(k);
                return compare(p, from_newton_gregory(newton_gregory(p, a), a));
            });
            add("check=roundtrip-bernoulli " + kv("k", k) + " a=" + a.str(), [k, a] {
                Polynomial p = bernoulli_poly(k);
                return compare(p, from_newton_gregory(newton_gregory(p, a), a));
            });
        }
        // delta S_k(x) = (x+1)^k
        add("check=delta-powersum " + kv("k", k), [k] {
            Polynomial expected = Polynomial::monomial(static_cast<std::size_t>(k)).shifted(ExactRat(1));
            return compare(expected, delta(powersum_poly(k)));
        });
        // j! R_{k,j}(x) = delta^j x^k
        for (long j = 0; j <= k; ++j)
            add("check=delta-power " + kv("j", j) + " " + kv("k", k), [k, j] {
                Polynomial lhs = stirling_poly(k, j).scaled(ExactRat(factorial(j)));
                Polynomial rhs = iterated_delta(Polynomial::monomial(static_cast<std::size_t>(k)), j);
                return compare(rhs, lhs);
            });
    }
}

void add_bernoulli(std::vector<Case>& cases, const SuiteConfig& cfg) {
    const Suite S = Suite::Bernoulli;
    auto add = [&](std::string params, std::function<CaseOutcome()> run) {
        cases.push_back({S, std::move(params), std::move(run)});
    };
    for (long k = 0; k <= cfg.k_max; ++k) {
        add("check=recurrence-vs-harmonic " + kv("k", k),
            [k] { return compare(bernoulli_number(k), bernoulli_number_harmonic(k)); });
        if (k >= 3 && k % 2 == 1)
            add("check=odd-vanish " + kv("k", k),
                [k] { return compare(ExactRat(0), bernoulli_number(k)); });
        add("check=delta-recurrence " + kv("k", k), [k] {
            Polynomial expected = Polynomial::monomial(static_cast<std::size_t>(k), ExactRat(k + 1));
            return compare(expected, delta(bernoulli_poly(k + 1)));
        });
        for (long r = 0; r <= cfg.r_max; ++r) {
            add("check=value-at-nonneg " + kv("k", k) + " " + kv("r", r), [k, r] {
                return compare(bernoulli_poly(k + 1).eval(ExactRat(r)), bernoulli_at_nonneg(k + 1, r));
            });
            add("check=value-at-negative " + kv("k", k) + " " + kv("r", r), [k, r] {
                return compare(bernoulli_poly(k + 1).eval(ExactRat(-r)), bernoulli_at_negative(k + 1, r));
            });
        }
        std::vector<ExactRat> xs;
        for (long x = -cfg.r_max; x <= cfg.r_max; ++x) xs.push_back(ExactRat(x));
        xs.insert(xs.end(), rational_spots().begin(), rational_spots().end());
        for (const ExactRat& x : xs) {
            add("check=value-general " + kv("k", k) + " x=" + x.str(), [k, x] {
                return compare(bernoulli_poly(k + 1).eval(x), bernoulli_general(k + 1, x));
            });
            add("check=shift-harmonic " + kv("k", k) + " x=" + x.str(), [k, x] {
                return compare(bernoulli_poly(k).eval(x - ExactRat(1)), bernoulli_shift_harmonic(k, x));
            });
        }
        for (long n = 0; n <= cfg.n_max; ++n)
            add("check=powersum-poly-discrete " + kv("k", k) + " " + kv("n", n), [k, n] {
                return compare(ExactRat(powersum_brute(k, n)), powersum_poly(k).eval(ExactRat(n)));
            });
    }
}

void add_con3_identity(std::vector<Case>& cases, const SuiteConfig& cfg) {
    for (long k = 0; k <= cfg.k_max; ++k)
        cases.push_back({Suite::Con3Identity, kv("k", k),
                         [k] { return compare(ExactInt(1), con3_unit_identity(k)); }});
}

void add_symmetry(std::vector<Case>& cases, const SuiteConfig& cfg) {
    // S_k(-r-1) = -delta_{k,0} + (-1)^(k+1) S_k(r)
    for (long k = 0; k <= cfg.k_max; ++k)
        for (long r = 0; r <= cfg.r_max; ++r)
            cases.push_back({Suite::Symmetry, kv("k", k) + " " + kv("r", r), [k, r] {
                                 ExactRat rhs = ExactRat(powersum_brute(k, r));
                                 if (k % 2 == 0) rhs = -rhs;
                                 if (k == 0) rhs -= ExactRat(1);
                                 return compare(rhs, powersum_poly(k).eval(ExactRat(-r - 1)));
                             }});
}

std::vector<Suite> normalize_suites(const std::vector<Suite>& requested) {
    std::vector<Suite> out;
    for (Suite s : all_suites())
        if (std::find(requested.begin(), requested.end(), s) != requested.end()) out.push_back(s);
    return out;
}

SuiteReport evaluate(const SuiteConfig& config, bool parallel) {
    SuiteConfig cfg = config;
    cfg.suites = normalize_suites(config.suites);

    std::vector<Case> cases = enumerate_cases(cfg);
    std::vector<CaseOutcome> outcomes(cases.size());

    auto run_one = [&](std::size_t i) {
        try {
            outcomes[i] = cases[i].run();
        } catch (const std::exception& e) {
            outcomes[i] = {false, "(no exception)", std::string("exception: ") + e.what()};
        }
    };

    bool use_omp = false;
#ifdef _OPENMP
    use_omp = parallel;
#endif
    if (use_omp) {
#ifdef _OPENMP
        int threads = cfg.parallelism <= 0 ? omp_get_max_threads() : cfg.parallelism;
        const long total = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (long i = 0; i < total; ++i) run_one(static_cast<std::size_t>(i));
#endif
    } else {
        for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
    }

    SuiteReport report;
    report.config = cfg;
    for (Suite s : cfg.suites) report.suites.push_back({s, 0, {}});
    for (std::size_t i = 0; i < cases.size(); ++i) {
        for (auto& result : report.suites) {
            if (result.suite != cases[i].suite) continue;
            ++result.cases_run;
            if (!outcomes[i].pass)
                result.failures.push_back({suite_name(cases[i].suite), cases[i].parameters,
                                           outcomes[i].expected, outcomes[i].actual});
            break;
        }
    }
    for (auto& result : report.suites) {
        std::stable_sort(result.failures.begin(), result.failures.end(),
                         [](const Failure& a, const Failure& b) {
                             return std::tie(a.suite, a.parameters) < std::tie(b.suite, b.parameters);
                         });
        if (!result.failures.empty()) report.overall_pass = false;
    }
    return report;
}

}  // namespace

std::vector<Case> enumerate_cases(const SuiteConfig& config) {
    std::vector<Case> cases;
    for (Suite s : normalize_suites(config.suites)) {
        switch (s) {
            case Suite::FormulaAgreement: add_formula_agreement(cases, config); break;
            case Suite::StirlingDuality: add_stirling_duality(cases, config); break;
            case Suite::NewtonGregory: add_newton_gregory(cases, config); break;
            case Suite::Bernoulli: add_bernoulli(cases, config); break;
            case Suite::Con3Identity: add_con3_identity(cases, config); break;
            case Suite::Symmetry: add_symmetry(cases, config); break;
        }
    }
    return cases;
}

SuiteReport run_suites(const SuiteConfig& config) { return evaluate(config, config.parallelism != 1); }

SuiteReport run_suites_serial(const SuiteConfig& config) { return evaluate(config, false); }

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = version;
    nlohmann::ordered_json jc;
    jc["k_max"] = config.k_max;
    jc["n_max"] = config.n_max;
    jc["r_max"] = config.r_max;
    jc["m_max"] = config.m_max;
    std::vector<std::string> names;
    for (Suite s : config.suites) names.push_back(suite_name(s));
    jc["suites"] = names;
    j["config"] = jc;
    nlohmann::ordered_json jsuites = nlohmann::ordered_json::array();
    for (const auto& result : suites) {
        nlohmann::ordered_json js;
        js["name"] = suite_name(result.suite);
        js["cases_run"] = result.cases_run;
        nlohmann::ordered_json jf = nlohmann::ordered_json::array();
        for (const auto& f : result.failures)
            jf.push_back({{"suite", f.suite},
                          {"parameters", f.parameters},
                          {"expected", f.expected},
                          {"actual", f.actual}});
        js["failures"] = jf;
        jsuites.push_back(js);
    }
    j["suites"] = jsuites;
    j["overall_pass"] = overall_pass;
    return j.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << "verification report v" << version << "\n";
    out << "config: " << kv("k_max", config.k_max) << " " << kv("n_max", config.n_max) << " "
        << kv("r_max", config.r_max) << " " << kv("m_max", config.m_max) << "\n";
    for (const auto& result : suites) {
        out << "suite " << suite_name(result.suite) << ": " << result.cases_run << " cases, "
            << result.failures.size() << " failures\n";
        for (const auto& f : result.failures)
            out << "  FAIL " << f.suite << " " << f.parameters << ": expected " << f.expected
                << ", got " << f.actual << "\n";
    }
    out << "overall: " << (overall_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace stirsum
