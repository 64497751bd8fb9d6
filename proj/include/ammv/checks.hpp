#pragma once

// Named verification checks over the built-in identity catalogue.  Each suite
// returns one CheckResult per identity; the CLI renders them as a TSV report
// and the test runner aggregates them per criterion.

#include <string>
#include <vector>

namespace ammv::checks {

struct CheckResult {
    std::string id;
    bool pass = false;
    double residual = 0.0;   // |lhs - rhs|; 0 for exact symbolic checks
    double tolerance = 0.0;  // budget the residual was compared against
    int digits = 0;          // evaluation digits actually used (0 = exact)
    double seconds = 0.0;
    std::string note;  // the identity being checked, in catalogue notation

    std::string str() const;
};

struct SuiteOptions {
    // Floor on evaluation digits.  Every check carries its own pinned digit
    // count and runs at the larger of the two, so raising the floor can only
    // shrink residuals.  Tolerances are fixed per check and never move.
    int digits = 0;
    // Worker threads for pre-evaluating the indices a suite needs.  Results
    // are bit-identical for any job count.
    int jobs = 1;
};

std::vector<CheckResult> run_products(const SuiteOptions& opt);
std::vector<CheckResult> run_regularization(const SuiteOptions& opt);
std::vector<CheckResult> run_duality(const SuiteOptions& opt);
std::vector<CheckResult> run_arctan(const SuiteOptions& opt);
std::vector<CheckResult> run_parity(const SuiteOptions& opt);
std::vector<CheckResult> run_values(const SuiteOptions& opt);

// Suite names in canonical order (excludes the "all" alias).
const std::vector<std::string>& suite_names();

// Runs one suite by name, or every suite in order for "all".  Throws
// std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace ammv::checks
