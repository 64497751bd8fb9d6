#include "checks_common.hpp"

#include "ammv/arctan.hpp"
#include "ammv/quadrature.hpp"

#include <functional>

namespace ammv::checks {

std::vector<CheckResult> run_arctan(const SuiteOptions& opt) {
    std::vector<CheckResult> out;

    // A(p) = int_0^1 arctan^p dx, closed form vs quadrature.
    {
        const int digits = detail::eff_digits(opt, 30);
        for (int p = 1; p <= 4; ++p) {
            detail::Timer t;
            Real lhs, rhs;
            {
                PrecisionGuard guard(2 * digits + 30);
                lhs = eval_closed_form(arctan_power_integral(p), digits);
                rhs = quad_arctan_pow(p, digits);
            }
            out.push_back(detail::numeric_check("arctan-A" + std::to_string(p), lhs, rhs, 1e-25,
                                                digits,
                                                "A(" + std::to_string(p) + ") closed form",
                                                t.seconds()));
        }
        // int_0^1 arctan^r(x)/x dx, closed form vs quadrature.
        for (int r = 1; r <= 4; ++r) {
            detail::Timer t;
            Real lhs, rhs;
            {
                PrecisionGuard guard(2 * digits + 30);
                lhs = eval_closed_form(arctan_over_x_closed(r), digits);
                rhs = quad_arctan_over_x(r, digits);
            }
            out.push_back(detail::numeric_check(
                "arctan-ox" + std::to_string(r), lhs, rhs, 1e-25, digits,
                "arctan^" + std::to_string(r) + "/x closed form", t.seconds()));
        }
    }

    // The four tabulated S/T values with a trailing bar-1.
    {
        const int digits = detail::eff_digits(opt, 25);
        struct FamCase {
            const char* id;
            const char* lhs;
            double tol;
            std::function<Real()> rhs;  // evaluated under the caller's guard
        };
        const std::vector<FamCase> fams = {
            {"arctan-S-2-b1", "S(2,b1)", 1e-12,
             [] {
                 return to_real(Rat(7, 2)) * const_zeta(3) - const_pi() * const_catalan() -
                        const_pi() * const_pi() / 4 * const_log2();
             }},
            {"arctan-T-2-1-b1", "T(2,1,b1)", 1e-12,
             [] {
                 return -6 * const_beta(4) + 3 * const_zeta(2) * const_catalan();
             }},
            {"arctan-S-2-1-1-b1", "S(2,1,1,b1)", 1e-8,
             [] {
                 return to_real(Rat(31, 4)) * const_zeta(5) - to_real(Rat(15, 8)) * const_zeta(4) * const_log2() -
                        to_real(Rat(63, 32)) * const_zeta(2) * const_zeta(3) - const_pi() * const_beta(4);
             }},
            {"arctan-T-2-1-1-1-b1", "T(2,1,1,1,b1)", 1e-8,
             [] {
                 return to_real(Rat(15, 4)) * const_zeta(4) * const_catalan() +
                        3 * const_zeta(2) * const_beta(4) - 10 * const_beta(6);
             }},
        };
        std::vector<Index> idxs;
        for (const FamCase& fc : fams) idxs.push_back(parse_family_value(fc.lhs).second);
        ValueCache cache;
        prewarm_indices(idxs, digits, opt.jobs, &cache);
        for (const FamCase& fc : fams) {
            detail::Timer t;
            Real lhs, rhs;
            {
                PrecisionGuard guard(2 * digits + 30);
                auto [c, idx] = parse_family_value(fc.lhs);
                lhs = to_real(c) * eval_index_cached(idx, digits, &cache).value;
                rhs = fc.rhs();
            }
            out.push_back(detail::numeric_check(fc.id, lhs, rhs, fc.tol, digits,
                                                std::string(fc.lhs) + " closed form",
                                                t.seconds()));
        }
    }

    // x^n arctan^p antiderivative families, worst residual over (n,m) in {1,2,3}^2.
    {
        const int digits = detail::eff_digits(opt, 30);
        const std::pair<XnVariant, const char*> variants[] = {
            {XnVariant::EvenEven, "arctan-xn-ee"},
            {XnVariant::EvenOdd, "arctan-xn-eo"},
            {XnVariant::OddEven, "arctan-xn-oe"},
            {XnVariant::OddOdd, "arctan-xn-oo"},
        };
        for (const auto& [var, id] : variants) {
            detail::Timer t;
            Real worst(0);
            for (int n = 1; n <= 3; ++n)
                for (int m = 1; m <= 3; ++m) {
                    Real r = verify_xn_arctan(n, m, var, digits);
                    if (r > worst) worst = r;
                }
            CheckResult r = detail::numeric_check(id, worst, Real(0), 1e-20, digits,
                                                  "max residual over (n,m) in {1,2,3}^2",
                                                  t.seconds());
            out.push_back(r);
        }
    }

    // The arctan^{2m}/x and arctan^{2m+1}/x expansions over S/T values.
    {
        const int digits = detail::eff_digits(opt, 20);
        for (int m = 1; m <= 2; ++m)
            for (bool odd : {false, true}) {
                detail::Timer t;
                Real r = verify_amtv_amsv_relation(m, odd, digits);
                std::string id = "arctan-TS-" + std::string(odd ? "odd" : "even") + "-" +
                                 std::to_string(m);
                out.push_back(detail::numeric_check(
                    id, r, Real(0), 1e-10, digits,
                    std::string("arctan^") + std::to_string(odd ? 2 * m + 1 : 2 * m) +
                        "/x over S/T values",
                    t.seconds()));
            }
    }

    return out;
}

}  // namespace ammv::checks
