#include "checks_common.hpp"

#include "ammv/relations.hpp"

#include <functional>

namespace ammv::checks {

namespace {

// Shorthands for the constants appearing in the catalogue, evaluated at the
// ambient precision set by the caller's guard.
struct Consts {
    Real G, pi, l2, z3, z5, b4, b6, li4, im3;
    static Consts make() {
        Consts c;
        c.G = const_catalan();
        c.pi = const_pi();
        c.l2 = const_log2();
        c.z3 = const_zeta(3);
        c.z5 = const_zeta(5);
        c.b4 = const_beta(4);
        c.b6 = const_beta(6);
        c.li4 = li_half(4);
        c.im3 = im_li_w(3);
        return c;
    }
};

struct ValueCase {
    const char* id;
    const char* lhs;  // family-value or index text, parsed by eval_symbol_text
    const char* note;
    std::function<Real(const Consts&)> rhs;
};

Real rr(long num, long den) { return Real(num) / Real(den); }

const std::vector<ValueCase>& value_cases() {
    static const std::vector<ValueCase> cases = {
        {"values-T-b1-2", "T(b1,2)", "T(b1,2) = G*pi - (7/2)zeta(3)",
         [](const Consts& c) { return c.G * c.pi - rr(7, 2) * c.z3; }},
        {"values-S-b1-1", "S(b1,1)", "S(b1,1) = -2G + pi*log2",
         [](const Consts& c) { return -2 * c.G + c.pi * c.l2; }},
        {"values-S-b1-b1", "S(b1,b1)", "S(b1,b1) = -2G + (1/2)pi*log2",
         [](const Consts& c) { return -2 * c.G + c.pi * c.l2 / 2; }},
        {"values-T-b1-2-1", "T(b1,2,1)",
         "T(b1,2,1) = -(1/4)G*pi^2 + 6beta(4) - (7/8)pi*zeta(3)",
         [](const Consts& c) {
             return -c.G * c.pi * c.pi / 4 + 6 * c.b4 - rr(7, 8) * c.pi * c.z3;
         }},
        {"values-T-b1-1-2", "T(b1,1,2)", "T(b1,1,2) = -6beta(4) + (7/4)pi*zeta(3)",
         [](const Consts& c) { return -6 * c.b4 + rr(7, 4) * c.pi * c.z3; }},
        {"values-S-b1-1-1", "S(b1,1,1)", "S(b1,1,1) = (1/4)pi^2*log2 - (21/16)zeta(3)",
         [](const Consts& c) { return c.pi * c.pi * c.l2 / 4 - rr(21, 16) * c.z3; }},
        {"values-S-b1-1-b1", "S(b1,1,b1)", "S(b1,1,b1) = (1/8)pi^2*log2 - (7/8)zeta(3)",
         [](const Consts& c) { return c.pi * c.pi * c.l2 / 8 - rr(7, 8) * c.z3; }},
        {"values-T-b1-1-1-2", "T(b1,1,1,2)",
         "T(b1,1,1,2) = pi*beta(4) + (7/16)pi^2*zeta(3) - (31/4)zeta(5)",
         [](const Consts& c) {
             return c.pi * c.b4 + rr(7, 16) * c.pi * c.pi * c.z3 - rr(31, 4) * c.z5;
         }},
        {"values-T-b1-1-2-1", "T(b1,1,2,1)",
         "T(b1,1,2,1) = -3pi*beta(4) - (7/32)pi^2*zeta(3) + (93/8)zeta(5)",
         [](const Consts& c) {
             return -3 * c.pi * c.b4 - rr(7, 32) * c.pi * c.pi * c.z3 + rr(93, 8) * c.z5;
         }},
        {"values-S-b1-1-1-1", "S(b1,1,1,1)",
         "S(b1,1,1,1) = -2beta(4) - (1/24)pi^3*log2 + (3/4)pi*zeta(3)",
         [](const Consts& c) {
             return -2 * c.b4 - c.pi * c.pi * c.pi * c.l2 / 24 + rr(3, 4) * c.pi * c.z3;
         }},
        {"values-S-b1-1-1-b1", "S(b1,1,1,b1)",
         "S(b1,1,1,b1) = -2beta(4) - (1/48)pi^3*log2 + (21/32)pi*zeta(3)",
         [](const Consts& c) {
             return -2 * c.b4 - c.pi * c.pi * c.pi * c.l2 / 48 + rr(21, 32) * c.pi * c.z3;
         }},
        {"values-T-b2-1-b1", "T(b2,1,b1)", "T(b2,1,b1) = -4G^2 + pi^4/32",
         [](const Consts& c) {
             return -4 * c.G * c.G + c.pi * c.pi * c.pi * c.pi / 32;
         }},
        {"values-S-b2-1-1", "S(b2,1,1)",
         "S(b2,1,1) = -2G^2 - (53/1440)pi^4 + 2G*pi*log2 - (1/6)pi^2*log2^2 + (1/6)log2^4 "
         "+ 4Li4(1/2)",
         [](const Consts& c) {
             const Real p2 = c.pi * c.pi, L = c.l2;
             return -2 * c.G * c.G - rr(53, 1440) * p2 * p2 + 2 * c.G * c.pi * L -
                    p2 * L * L / 6 + L * L * L * L / 6 + 4 * c.li4;
         }},
        {"values-S-b2-1-b1", "S(b2,1,b1)",
         "S(b2,1,b1) = -2G^2 - (61/5760)pi^4 + G*pi*log2 - (1/12)pi^2*log2^2 + (1/12)log2^4 "
         "+ 2Li4(1/2)",
         [](const Consts& c) {
             const Real p2 = c.pi * c.pi, L = c.l2;
             return -2 * c.G * c.G - rr(61, 5760) * p2 * p2 + c.G * c.pi * L -
                    p2 * L * L / 12 + L * L * L * L / 12 + 2 * c.li4;
         }},
        {"values-tt-b2-b1", "tt(b2,b1)", "tt(b2,b1) = (1/4)pi^2*log2 - (7/4)zeta(3)",
         [](const Consts& c) { return c.pi * c.pi * c.l2 / 4 - rr(7, 4) * c.z3; }},
        {"values-tt-b1-1-b1", "tt(b1,1,b1)", "tt(b1,1,b1) = -G*pi + (21/8)zeta(3)",
         [](const Consts& c) { return -c.G * c.pi + rr(21, 8) * c.z3; }},
        {"values-T-b1-1-b1-b1", "T(b1,1,b1,b1)",
         "T(b1,1,b1,b1) = -(1/4)G*pi^2 + 6beta(4) - (7/8)pi*zeta(3)",
         [](const Consts& c) {
             return -c.G * c.pi * c.pi / 4 + 6 * c.b4 - rr(7, 8) * c.pi * c.z3;
         }},
        {"values-T-b2-b1", "T(b2,b1)",
         "T(b2,b1) = -(3/16)pi^3 + 8ImLi3((1+i)/2) + 4G*log2 - (1/4)pi*log2^2",
         [](const Consts& c) {
             return -rr(3, 16) * c.pi * c.pi * c.pi + 8 * c.im3 + 4 * c.G * c.l2 -
                    c.pi * c.l2 * c.l2 / 4;
         }},
        {"values-T-b1-1-1-b1", "T(b1,1,1,b1)", "T(b1,1,1,b1) = -(1/4)G*pi^2 + 2beta(4)",
         [](const Consts& c) { return -c.G * c.pi * c.pi / 4 + 2 * c.b4; }},
        {"values-S-b1-2", "S(b1,2)",
         "S(b1,2) = (11/96)pi^3 - 4ImLi3((1+i)/2) - 2G*log2 + (1/8)pi*log2^2",
         [](const Consts& c) {
             return rr(11, 96) * c.pi * c.pi * c.pi - 4 * c.im3 - 2 * c.G * c.l2 +
                    c.pi * c.l2 * c.l2 / 8;
         }},
        {"values-M-b2-b1-c1", "M(b2,b1,c1)",
         "M(b2,b1,c1) = (91/1920)pi^4 + (1/4)pi^2*log2^2 - (1/4)log2^4 - 6Li4(1/2) "
         "- (7/2)log2*zeta(3)",
         [](const Consts& c) {
             const Real p2 = c.pi * c.pi, L = c.l2;
             return rr(91, 1920) * p2 * p2 + p2 * L * L / 4 - L * L * L * L / 4 - 6 * c.li4 -
                    rr(7, 2) * L * c.z3;
         }},
        {"values-M-cb1-1-b1-c1", "M(cb1,1,b1,c1)",
         "M(cb1,1,b1,c1) = -(1/12)G*pi^2 - 2beta(4) + (1/16)pi^3*log2 + (7/16)pi*zeta(3)",
         [](const Consts& c) {
             return -c.G * c.pi * c.pi / 12 - 2 * c.b4 + c.pi * c.pi * c.pi * c.l2 / 16 +
                    rr(7, 16) * c.pi * c.z3;
         }},
    };
    return cases;
}

}  // namespace

std::vector<CheckResult> run_values(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    const int digits = detail::eff_digits(opt, 20);

    std::vector<Index> all;
    for (const ValueCase& vc : value_cases()) {
        std::string text = vc.lhs;
        all.push_back(text[0] == 'M' ? parse_index(text) : parse_family_value(text).second);
    }
    ValueCache cache;
    prewarm_indices(all, digits, opt.jobs, &cache);

    for (const ValueCase& vc : value_cases()) {
        detail::Timer t;
        Real lhs, rhs;
        {
            PrecisionGuard guard(2 * digits + 30);
            lhs = eval_symbol_text(vc.lhs, digits, &cache).value;
            rhs = vc.rhs(Consts::make());
        }
        out.push_back(detail::numeric_check(vc.id, lhs, rhs, 1e-10, digits, vc.note,
                                            t.seconds()));
    }
    return out;
}

}  // namespace ammv::checks
