#include "checks_common.hpp"

namespace ammv::checks {

// The weight-3 anchor: M(c2,b1) + M(cb2,cb1) = M(b2,c1), derived from the
// regularized double shuffle of the carrier M(c1,b2) and printed in the
// catalogue as -0.7739912.
std::vector<CheckResult> run_regularization(const SuiteOptions& opt) {
    std::vector<CheckResult> out;

    // Symbolic derivation: the carrier's T^0 slice is exactly the anchor.
    {
        detail::Timer t;
        Relation want;
        want.weight = 3;
        want.terms = detail::comb(
            {{Rat(1), "M(c2,b1)"}, {Rat(1), "M(cb2,cb1)"}, {Rat(-1), "M(b2,c1)"}});
        want.normalize();
        bool found = false;
        for (const Relation& r : reg_dbsf_carrier(parse_index("M(c1,b2)")))
            if (r.weight == 3 && r.terms == want.terms) found = true;
        out.push_back(detail::exact_check(
            "reg-w3-carrier", found,
            "carrier M(c1,b2) yields M(c2,b1) + M(cb2,cb1) - M(b2,c1) = 0", t.seconds()));
    }

    const int digits = detail::eff_digits(opt, 20);
    ValueCache cache;
    prewarm_indices({parse_index("M(c2,b1)"), parse_index("M(cb2,cb1)"), parse_index("M(b2,c1)")},
                    digits, opt.jobs, &cache);

    detail::Timer t;
    Real lhs, rhs;
    {
        PrecisionGuard guard(2 * digits + 30);
        lhs = eval_index_cached(parse_index("M(c2,b1)"), digits, &cache).value +
              eval_index_cached(parse_index("M(cb2,cb1)"), digits, &cache).value;
        rhs = eval_index_cached(parse_index("M(b2,c1)"), digits, &cache).value;
    }
    const double t_eval = t.seconds();

    // Both sides against the 7-digit printed value.
    {
        PrecisionGuard guard(2 * digits + 30);
        const Real printed = Real("-0.7739912");
        const Real dev_l = boost::multiprecision::abs(lhs - printed);
        const Real dev_r = boost::multiprecision::abs(rhs - printed);
        CheckResult r = detail::numeric_check(
            "reg-w3", lhs, printed, 1e-6, digits,
            "M(c2,b1) + M(cb2,cb1) and M(b2,c1) both print as -0.7739912", t_eval);
        r.residual = detail::to_d(dev_l > dev_r ? dev_l : dev_r);
        r.pass = r.residual < r.tolerance;
        out.push_back(r);
    }

    // Mutual agreement of the two sides.
    out.push_back(detail::numeric_check("reg-w3-agree", lhs, rhs, 1e-15, digits,
                                        "M(c2,b1) + M(cb2,cb1) = M(b2,c1)", t_eval));
    return out;
}

}  // namespace ammv::checks
