#include "checks_common.hpp"

#include "ammv/algebra.hpp"

namespace ammv::checks {

namespace {

struct DualityCase {
    const char* id;
    const char* lhs;
    std::vector<std::pair<Rat, std::string>> rhs;
};

const std::vector<DualityCase>& duality_cases() {
    static const std::vector<DualityCase> cases = {
        {"dual-ex1",
         "M(cb2,c1,cb1)",
         {{Rat(1), "M(c2,c1,c1)"},
          {Rat(1), "M(c2,1,c1)"},
          {Rat(1), "M(2,cb1,cb1)"},
          {Rat(1), "M(b2,b1,c1)"},
          {Rat(1), "M(cb2,c1,cb1)"},
          {Rat(-1), "M(2,1,c1)"},
          {Rat(-1), "M(c2,cb1,cb1)"},
          {Rat(-1), "M(2,c1,c1)"},
          {Rat(-1), "M(cb2,cb1,c1)"}}},
        {"dual-ex2",
         "M(2,c1,cb2)",
         {{Rat(1), "M(cb1,b1,c3)"}, {Rat(1), "M(cb1,b1,c1,c2)"}, {Rat(1), "M(b1,cb1,1,c2)"}}},
        {"dual-ex3",
         "M(b2,b3,cb1)",
         {{Rat(-1), "M(b1,cb2,1,c1,c1)"},
          {Rat(-1), "M(cb1,b2,c1,1,c1)"},
          {Rat(1), "M(b1,cb2,1,cb1,cb1)"}}},
        {"dual-ex4",
         "M(cb3,c1,b2,c1)",
         {{Rat(1), "M(3,cb1,b1,1,c1)"},
          {Rat(1), "M(c3,b1,cb1,1,c1)"},
          {Rat(-1), "M(3,cb1,1,b1,c1)"}}},
    };
    return cases;
}

}  // namespace

std::vector<CheckResult> run_duality(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    const int digits = detail::eff_digits(opt, 20);

    std::vector<Index> all;
    for (const DualityCase& dc : duality_cases()) {
        all.push_back(parse_index(dc.lhs));
        for (const auto& [c, text] : dc.rhs) all.push_back(parse_index(text));
    }
    ValueCache cache;
    prewarm_indices(all, digits, opt.jobs, &cache);

    for (const DualityCase& dc : duality_cases()) {
        const Index lhs = parse_index(dc.lhs);
        const LinComb<Index> rhs = detail::comb(dc.rhs);

        {
            detail::Timer t;
            const LinComb<Index> got = dual_index(lhs);
            std::string note = std::string(dc.lhs) + " dualizes to " +
                               std::to_string(rhs.size()) + " terms";
            if (got != rhs) note += "; got " + got.str();
            out.push_back(detail::exact_check(std::string(dc.id) + "-sym", got == rhs, note,
                                              t.seconds()));
        }
        {
            detail::Timer t;
            Real l, r;
            {
                PrecisionGuard guard(2 * digits + 30);
                l = eval_index_cached(lhs, digits, &cache).value;
                r = eval_lincomb_cached(rhs, digits, &cache).value;
            }
            out.push_back(detail::numeric_check(std::string(dc.id) + "-num", l, r, 1e-12, digits,
                                                std::string(dc.lhs) + " = dual expansion",
                                                t.seconds()));
        }
    }
    return out;
}

}  // namespace ammv::checks
