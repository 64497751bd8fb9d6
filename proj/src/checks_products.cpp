#include "checks_common.hpp"

#include "ammv/algebra.hpp"

namespace ammv::checks {

namespace {

struct ProductCase {
    const char* id;
    const char* kind;  // "shuffle" or "stuffle"
    const char* lhs_a;
    const char* lhs_b;
    std::vector<std::pair<Rat, std::string>> expected;
};

const std::vector<ProductCase>& product_cases() {
    static const std::vector<ProductCase> cases = {
        {"prod-shuffle-1",
         "shuffle",
         "M(cb1)",
         "M(cb2)",
         {{Rat(-1), "M(b1,c2)"}, {Rat(-2), "M(b2,c1)"}}},
        {"prod-shuffle-2",
         "shuffle",
         "M(b3)",
         "M(c2)",
         {{Rat(1), "M(cb3,cb2)"},
          {Rat(1), "M(c2,b3)"},
          {Rat(2), "M(c3,b2)"},
          {Rat(3), "M(c4,b1)"},
          {Rat(3), "M(cb4,cb1)"}}},
        {"prod-stuffle-1",
         "stuffle",
         "M(b2,3,cb4)",
         "M(cb2)",
         {{Rat(1), "M(b2,3,cb4,cb2)"},
          {Rat(1), "M(b2,3,cb2,cb4)"},
          {Rat(1), "M(b2,cb2,3,cb4)"},
          {Rat(1), "M(cb2,b2,3,cb4)"},
          {Rat(2), "M(b2,3,c6)"}}},
        {"prod-stuffle-2",
         "stuffle",
         "M(b1,cb2)",
         "M(3,cb2)",
         {{Rat(1), "M(b1,cb2,3,cb2)"},
          {Rat(1), "M(3,cb2,b1,cb2)"},
          {Rat(2), "M(b1,3,cb2,cb2)"},
          {Rat(2), "M(3,b1,cb2,cb2)"},
          {Rat(2), "M(b1,3,c4)"},
          {Rat(2), "M(3,b1,c4)"},
          {Rat(4), "M(b4,cb2,cb2)"},
          {Rat(4), "M(b4,c4)"}}},
    };
    return cases;
}

}  // namespace

std::vector<CheckResult> run_products(const SuiteOptions&) {
    std::vector<CheckResult> out;
    for (const ProductCase& pc : product_cases()) {
        detail::Timer t;
        const Index a = parse_index(pc.lhs_a);
        const Index b = parse_index(pc.lhs_b);
        const bool is_shuffle = std::string(pc.kind) == "shuffle";
        const LinComb<Index> got =
            is_shuffle ? shuffle_on_indices(a, b) : stuffle(a, b);
        const LinComb<Index> want = detail::comb(pc.expected);
        std::string note = std::string(pc.lhs_a) + " * " + pc.lhs_b + " [" + pc.kind + "], " +
                           std::to_string(want.size()) + " terms";
        if (got != want)
            note += "; got " + got.str();
        out.push_back(detail::exact_check(pc.id, got == want, note, t.seconds()));
    }
    return out;
}

}  // namespace ammv::checks
