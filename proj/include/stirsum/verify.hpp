#ifndef STIRSUM_VERIFY_HPP
#define STIRSUM_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "stirsum/exact.hpp"

namespace stirsum {

// Data-driven identity verification. Every suite sweeps a parameter grid and
// compares two independently computed values per grid point; disagreements
// are reported as data, never thrown. Grid points are pure and independent,
// so evaluation is embarrassingly parallel: run_suites fans the case list out
// across OpenMP threads, while run_suites_serial is the plain-loop reference
// the tests (and the bench tool) compare against. Both produce byte-identical
// serialized reports for a given config.

enum class Suite {
    FormulaAgreement,
    StirlingDuality,
    NewtonGregory,
    Bernoulli,
    Con3Identity,
    Symmetry,
};

const std::vector<Suite>& all_suites();
std::string suite_name(Suite s);
/// Parses "formula-agreement", ..., "symmetry"; throws std::domain_error.
Suite parse_suite(const std::string& name);

struct SuiteConfig {
    long k_max = 12;
    long n_max = 20;
    long r_max = 8;
    long m_max = 8;
    std::vector<Suite> suites = all_suites();
    /// Execution hint only (never echoed in reports): 0 = all hardware
    /// threads, 1 = serial, N = use N threads.
    int parallelism = 0;
};

struct Failure {
    std::string suite;
    std::string parameters;
    std::string expected;
    std::string actual;
};

struct SuiteResult {
    Suite suite;
    long cases_run = 0;
    std::vector<Failure> failures;
};

struct SuiteReport {
    int version = 1;
    SuiteConfig config;
    std::vector<SuiteResult> suites;
    bool overall_pass = true;

    /// Deterministic serializations; field layout is pinned in
    /// docs/report-schema.md. Big integers and rationals appear as decimal
    /// strings, never floating point.
    std::string to_json() const;
    std::string to_text() const;
};

struct CaseOutcome {
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct Case {
    Suite suite;
    std::string parameters;
    std::function<CaseOutcome()> run;
};

/// The full case list for a config, in canonical order. Enlarging any bound
/// only appends cases within a suite, never removes them.
std::vector<Case> enumerate_cases(const SuiteConfig& config);

SuiteReport run_suites(const SuiteConfig& config);
SuiteReport run_suites_serial(const SuiteConfig& config);

}  // namespace stirsum

#endif
