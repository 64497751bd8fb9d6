#include "checks_common.hpp"

#include <functional>

namespace ammv::checks {

namespace {

// One depth-3 reduction: LHS index = rational combination of depth <= 2
// indices with constant coefficients, plus a pure constant tail.  The lambda
// assembles the right-hand side from cached index values at the ambient
// precision.
struct ParityCase {
    const char* id;
    const char* lhs;
    const char* note;
    std::vector<const char*> rhs_indices;
    std::function<Real(const std::function<Real(const char*)>&)> rhs;
};

const std::vector<ParityCase>& parity_cases() {
    static const std::vector<ParityCase> cases = {
        {"parity-1", "M(cb1,2,b2)",
         "M(cb1,2,b2) reduces to depth <= 2 and (7/4)*G*zeta(3)",
         {"M(2,cb1)", "M(2,b2)", "M(2,cb3)", "M(3,cb2)", "M(4,cb1)", "M(b4,cb1)"},
         [](const std::function<Real(const char*)>& ev) {
             const Real pi = const_pi();
             return -pi * pi / 12 * ev("M(2,cb1)") - pi / 2 * ev("M(2,b2)") + ev("M(2,cb3)") +
                    2 * ev("M(3,cb2)") + 3 * ev("M(4,cb1)") + ev("M(b4,cb1)") +
                    to_real(Rat(7, 4)) * const_catalan() * const_zeta(3);
         }},
        {"parity-2", "M(b1,c2,c1)",
         "M(b1,c2,c1) reduces to depth <= 2 and log2/pi constants",
         {"M(c2,b1)", "M(2,cb1)", "M(c3,b1)", "M(c3,c1)", "M(c2,c2)"},
         [](const std::function<Real(const char*)>& ev) {
             const Real pi = const_pi();
             const Real l2 = const_log2();
             return -2 * l2 * ev("M(c2,b1)") - pi / 2 * ev("M(2,cb1)") + ev("M(c3,b1)") -
                    2 * ev("M(c3,c1)") - ev("M(c2,c2)") + to_real(Rat(35, 4)) * l2 * const_zeta(3) -
                    pi * pi / 2 * l2 * l2 - pi * pi * pi * pi / 16;
         }},
        {"parity-3", "M(b1,b2,c1)",
         "M(b1,b2,c1) reduces to depth <= 2 and log2 constants",
         {"M(b2,b1)", "M(b2,c2)", "M(b3,c1)", "M(3,c1)"},
         [](const std::function<Real(const char*)>& ev) {
             const Real pi = const_pi();
             const Real l2 = const_log2();
             return -2 * l2 * ev("M(b2,b1)") - ev("M(b2,c2)") - 2 * ev("M(b3,c1)") -
                    ev("M(3,c1)") - to_real(Rat(27, 8)) * l2 * const_zeta(3) + pi * pi / 4 * l2 * l2;
         }},
    };
    return cases;
}

}  // namespace

std::vector<CheckResult> run_parity(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    const int digits = detail::eff_digits(opt, 20);

    std::vector<Index> all;
    for (const ParityCase& pc : parity_cases()) {
        all.push_back(parse_index(pc.lhs));
        for (const char* text : pc.rhs_indices) all.push_back(parse_index(text));
    }
    ValueCache cache;
    prewarm_indices(all, digits, opt.jobs, &cache);

    for (const ParityCase& pc : parity_cases()) {
        detail::Timer t;
        Real lhs, rhs;
        {
            PrecisionGuard guard(2 * digits + 30);
            auto ev = [&](const char* text) {
                return eval_index_cached(parse_index(text), digits, &cache).value;
            };
            lhs = ev(pc.lhs);
            rhs = pc.rhs(ev);
        }
        out.push_back(detail::numeric_check(pc.id, lhs, rhs, 1e-10, digits, pc.note,
                                            t.seconds()));
    }
    return out;
}

}  // namespace ammv::checks
