#pragma once

// Shared helpers for the check suites.  Internal to src/.

#include "ammv/checks.hpp"
#include "ammv/numerics.hpp"
#include "ammv/regularization.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

namespace ammv::checks::detail {

inline int eff_digits(const SuiteOptions& opt, int pinned) {
    return std::max(opt.digits, pinned);
}

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline double to_d(const Real& r) { return r.convert_to<double>(); }

// A numeric identity check: |lhs - rhs| against a fixed budget.
inline CheckResult numeric_check(std::string id, const Real& lhs, const Real& rhs, double tol,
                                 int digits, std::string note, double seconds) {
    CheckResult r;
    r.id = std::move(id);
    r.residual = to_d(boost::multiprecision::abs(lhs - rhs));
    r.tolerance = tol;
    r.pass = r.residual < tol;
    r.digits = digits;
    r.seconds = seconds;
    r.note = std::move(note);
    return r;
}

// An exact symbolic check (already decided).
inline CheckResult exact_check(std::string id, bool pass, std::string note, double seconds) {
    CheckResult r;
    r.id = std::move(id);
    r.pass = pass;
    r.residual = 0.0;
    r.tolerance = 0.0;
    r.digits = 0;
    r.seconds = seconds;
    r.note = std::move(note);
    return r;
}

// Builds a linear combination from (coefficient, index-text) pairs.
inline LinComb<Index> comb(const std::vector<std::pair<Rat, std::string>>& terms) {
    LinComb<Index> lc;
    for (const auto& [c, text] : terms) lc.add(parse_index(text), c);
    return lc;
}

}  // namespace ammv::checks::detail
