#pragma once

#include "ammv/index.hpp"
#include "ammv/numerics.hpp"
#include "ammv/quadrature.hpp"
#include "ammv/regularization.hpp"
#include "ammv/tpoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ammv {

enum class CotUpper { HalfPi, QuarterPi };

namespace detail {

inline Rat pow2_rat(int n) {
    Int p = 1;
    p <<= (n < 0 ? -n : n);
    return n >= 0 ? Rat(p) : Rat(1) / Rat(p);
}

inline ConstMonomial pi_pow(int a) { return ConstMonomial::power(sym_pi(), a); }

}  // namespace detail

// Closed form of int_0^{pi/2 | pi/4} x^p cot(x) dx.  For even p a zeta(p+1)
// term appears; it enters at full weight, outside the braced prefactor (for
// the pi/4 case, outside the (1/2)(pi/4)^p factor).  That reading is the one
// that survives the quadrature cross-checks in the test suite.
inline ClosedForm cot_moment(int p, CotUpper upper) {
    if (p < 1) throw std::domain_error("cot_moment: p must be >= 1");
    const bool quarter = (upper == CotUpper::QuarterPi);
    // HalfPi prefactor (pi/2)^p = pi^p/2^p; QuarterPi (1/2)(pi/4)^p = pi^p/2^{2p+1}.
    const Rat pref = Rat(1) / detail::pow2_rat(quarter ? 2 * p + 1 : p);
    ClosedForm out;
    out.add(detail::pi_pow(p) * ConstMonomial::power(sym_log2(), 1), pref);
    for (int k = 1; 2 * k <= p; ++k) {
        Int four_k = Int(1) << (2 * k);
        Rat c = rat_factorial(p) * Rat(four_k - 1) / (rat_factorial(p - 2 * k) * Rat(four_k));
        if (k % 2 == 1) c = -c;
        out.add(detail::pi_pow(p - 2 * k) * ConstMonomial::power(sym_zeta(2 * k + 1), 1),
                c * pref);
    }
    if (quarter) {
        for (int k = 1; 2 * k <= p + 1; ++k) {
            // braced term: - (-4)^k beta(2k) p! / ((p+1-2k)! pi^{2k-1})
            Int four_k = Int(1) << (2 * k);
            Rat c = rat_factorial(p) * Rat(four_k) / rat_factorial(p + 1 - 2 * k);
            if (k % 2 == 0) c = -c;
            out.add(detail::pi_pow(p + 1 - 2 * k) * ConstMonomial::power(sym_beta(2 * k), 1),
                    c * pref);
        }
    }
    if (p % 2 == 0) {
        Rat d = rat_factorial(p) / detail::pow2_rat(p);
        if ((p / 2) % 2 == 1) d = -d;
        out.add(ConstMonomial::power(sym_zeta(p + 1), 1), d);
    }
    return out;
}

// A(p) = int_0^1 arctan^p(x) dx, assembled from the cotangent moments:
//   A(p) = (pi/4)^p - p pi^{p-1} log2 / 2^p
//          - p sum_{k=1}^{p-1} (-1)^k C(p-1,k) (pi/2)^{p-1-k} int_{pi/4}^{pi/2} u^k cot u du.
inline ClosedForm arctan_power_integral(int p) {
    if (p < 1) throw std::domain_error("arctan_power_integral: p must be >= 1");
    ClosedForm a;
    a.add(detail::pi_pow(p), Rat(1) / detail::pow2_rat(2 * p));
    a.add(detail::pi_pow(p - 1) * ConstMonomial::power(sym_log2(), 1),
          -Rat(p) / detail::pow2_rat(p));
    for (int k = 1; k <= p - 1; ++k) {
        ClosedForm ik = cot_moment(k, CotUpper::HalfPi);
        ik -= cot_moment(k, CotUpper::QuarterPi);
        Rat c = Rat(p) * rat_binom(p - 1, k) / detail::pow2_rat(p - 1 - k);
        if (k % 2 == 0) c = -c;  // overall factor -p(-1)^k C(p-1,k)
        a += ik * ClosedForm::unit(detail::pi_pow(p - 1 - k), c);
    }
    return a;
}

// Tabulated closed forms of int_0^1 arctan^r(x)/x dx for r <= 4.
inline ClosedForm arctan_over_x_closed(int r) {
    ClosedForm out;
    switch (r) {
        case 1:
            out.add(ConstMonomial::power(sym_beta(2), 1), Rat(1));
            return out;
        case 2:
            out.add(detail::pi_pow(1) * ConstMonomial::power(sym_beta(2), 1), Rat(1, 2));
            out.add(ConstMonomial::power(sym_zeta(3), 1), Rat(-7, 8));
            return out;
        case 3:
            out.add(ConstMonomial::power(sym_zeta(2), 1) * ConstMonomial::power(sym_beta(2), 1),
                    Rat(9, 8));
            out.add(ConstMonomial::power(sym_beta(4), 1), Rat(-3, 2));
            return out;
        case 4:
            out.add(ConstMonomial::power(sym_zeta(5), 1), Rat(93, 32));
            out.add(detail::pi_pow(1) * ConstMonomial::power(sym_beta(4), 1), Rat(-3, 2));
            out.add(detail::pi_pow(3) * ConstMonomial::power(sym_beta(2), 1), Rat(1, 16));
            return out;
        default:
            throw std::domain_error("arctan_over_x_closed: tabulated only for 1 <= r <= 4");
    }
}

// int_0^1 arctan^r(x)/x dx = (-1)^{[(r+1)/2]} r!/2^r T(b2, {1}_{r-1}),
// returned as coeff * M(index).
inline std::pair<Rat, Index> arctan_over_x_ammv(int r) {
    if (r < 1) throw std::domain_error("arctan_over_x_ammv: r must be >= 1");
    FamilyIndex f;
    f.family = Family::AMTV;
    f.comps.emplace_back(2, -1);
    for (int i = 1; i < r; ++i) f.comps.emplace_back(1, +1);
    auto [c, idx] = specialize(f);
    Rat pre = rat_factorial(r) / detail::pow2_rat(r);
    if (((r + 1) / 2) % 2 == 1) pre = -pre;
    return {pre * c, idx};
}

// A(p) as an AMMV combination: the two depth-p all-ones indices with
// sigma = (-1, 1, ..., 1) and alternating-parity decorations.
inline LinComb<Index> ip_jp_combo(int p) {
    if (p < 1) throw std::domain_error("ip_jp_combo: p must be >= 1");
    auto mk = [p](const std::vector<int>& eps) {
        Index i;
        for (int j = 0; j < p; ++j) i.comps.push_back(Component{1, j == 0 ? -1 : +1, eps[j]});
        return i;
    };
    Rat c = rat_factorial(p) / detail::pow2_rat(p);
    LinComb<Index> out;
    std::vector<int> e1(p), e2(p);
    if (p % 2 == 0) {
        // I_p: eps = {ev,od}_{p/2} and {od,od,{ev,od}_{p/2-1}}; ev = +1, od = -1.
        for (int j = 0; j < p; ++j) e1[j] = (j % 2 == 0) ? +1 : -1;
        e2[0] = e2[1] = -1;
        for (int j = 2; j < p; ++j) e2[j] = (j % 2 == 0) ? +1 : -1;
        if ((p / 2) % 2 == 1) c = -c;
        out.add(mk(e1), c);
        out.add(mk(e2), c);
    } else {
        // J_p: eps = {od,{ev,od}} minus {ev,{ev,od}}.
        for (int j = 1; j < p; ++j) e1[j] = e2[j] = (j % 2 == 1) ? +1 : -1;
        e1[0] = -1;
        e2[0] = +1;
        if (((p + 1) / 2) % 2 == 1) c = -c;
        out.add(mk(e1), c);
        out.add(mk(e2), -c);
    }
    return out;
}

// --- x^a arctan^b closed-form families -------------------------------------------

enum class XnVariant { EvenEven, EvenOdd, OddEven, OddOdd };

// Right-hand side of the x^{2n-2|2n-1} arctan^{2m|2m-1} evaluation, built from
// finite T/S harmonic sums, powers of arctan(1) = pi/4, and A(p).
inline Real xn_arctan_rhs(int n, int m, XnVariant var, int digits) {
    if (n < 1 || m < 1) throw std::domain_error("xn_arctan_rhs: need n, m >= 1");
    PrecisionGuard guard(digits + 15);
    const Real pi = const_pi();
    auto tb1 = [&](int j) { return detail::int_pow(-pi / 4, j); };
    auto A = [&](int p) { return eval_closed_form(arctan_power_integral(p), digits); };
    auto Tn = [&](int len, bool bar) -> Real {
        std::vector<int> sig(len, 1), k(len, 1);
        if (bar && len > 0) sig.back() = -1;
        return to_real(harmonic_T(sig, k, n));
    };
    auto Sn = [&](int len, bool bar) -> Real {
        std::vector<int> sig(len, 1), k(len, 1);
        if (bar && len > 0) sig.back() = -1;
        return to_real(harmonic_S(sig, k, n));
    };
    const int sn = (n % 2 == 0) ? +1 : -1;  // (-1)^n
    Real v(0);
    switch (var) {
        case XnVariant::EvenEven: {
            const Rat f = rat_factorial(2 * m);
            const Rat den(2 * n - 1);
            v += to_real(Rat(1 + sn) / den) * tb1(2 * m);
            v += to_real(Rat((m % 2 == 0) ? sn : -sn) * f /
                         (detail::pow2_rat(2 * m) * den)) *
                 Tn(2 * m, true);
            for (int u = 0; u <= m - 1; ++u) {
                Rat c = -Rat(sn) * f / (den * rat_factorial(2 * m - 2 * u) *
                                        detail::pow2_rat(2 * u));
                if (u % 2 == 1) c = -c;
                v += to_real(c) * Tn(2 * u, false) * A(2 * m - 2 * u);
            }
            for (int w = 1; w <= m - 1; ++w) {
                Rat c = Rat(sn) * f / (den * detail::pow2_rat(2 * w) *
                                       rat_factorial(2 * m - 2 * w));
                if (w % 2 == 1) c = -c;
                v += to_real(c) * tb1(2 * m - 2 * w) * (Tn(2 * w, false) + Tn(2 * w, true));
            }
            for (int w = 0; w <= m - 1; ++w) {
                Rat c = Rat(sn) * f / (den * detail::pow2_rat(2 * w + 1) *
                                       rat_factorial(2 * m - 2 * w - 1));
                if (w % 2 == 1) c = -c;
                v += to_real(c) * tb1(2 * m - 2 * w - 1) *
                     (Sn(2 * w + 1, false) - Sn(2 * w + 1, true));
            }
            return v;
        }
        case XnVariant::EvenOdd: {
            const Rat f = rat_factorial(2 * m - 1);
            const Rat den(2 * n - 1);
            v -= to_real(Rat(1 + sn) / den) * tb1(2 * m - 1);
            v -= to_real(Rat((m % 2 == 0) ? sn : -sn) * f /
                         (detail::pow2_rat(2 * m - 1) * den)) *
                 Sn(2 * m - 1, true);
            for (int u = 0; u <= m - 1; ++u) {
                Rat c = -Rat(sn) * f / (den * rat_factorial(2 * m - 2 * u - 1) *
                                        detail::pow2_rat(2 * u));
                if (u % 2 == 1) c = -c;
                v += to_real(c) * Tn(2 * u, false) * A(2 * m - 2 * u - 1);
            }
            for (int w = 1; w <= m - 1; ++w) {
                Rat c = -Rat(sn) * f / (den * detail::pow2_rat(2 * w) *
                                        rat_factorial(2 * m - 2 * w - 1));
                if (w % 2 == 1) c = -c;
                v += to_real(c) * tb1(2 * m - 2 * w - 1) * (Tn(2 * w, false) + Tn(2 * w, true));
            }
            for (int w = 1; w <= m - 1; ++w) {
                Rat c = Rat(sn) * f / (den * detail::pow2_rat(2 * w - 1) *
                                       rat_factorial(2 * m - 2 * w));
                if (w % 2 == 1) c = -c;
                v += to_real(c) * tb1(2 * m - 2 * w) *
                     (Sn(2 * w - 1, false) - Sn(2 * w - 1, true));
            }
            return v;
        }
        case XnVariant::OddEven: {
            const Rat f = rat_factorial(2 * m);
            const Rat den(2 * n);
            v += to_real(Rat(1 - sn) / den) * tb1(2 * m);
            v += to_real(Rat((m % 2 == 0) ? sn : -sn) * f /
                         (detail::pow2_rat(2 * m) * den)) *
                 Sn(2 * m, true);
            for (int u = 0; u <= m - 1; ++u) {
                Rat c = Rat(sn) * f / (den * rat_factorial(2 * m - 2 * u - 1) *
                                       detail::pow2_rat(2 * u + 1));
                if (u % 2 == 1) c = -c;
                v += to_real(c) * Tn(2 * u + 1, false) * A(2 * m - 2 * u - 1);
            }
            for (int w = 0; w <= m - 1; ++w) {
                Rat c = Rat(sn) * f / (den * detail::pow2_rat(2 * w + 1) *
                                       rat_factorial(2 * m - 2 * w - 1));
                if (w % 2 == 1) c = -c;
                v += to_real(c) * tb1(2 * m - 2 * w - 1) *
                     (Tn(2 * w + 1, false) + Tn(2 * w + 1, true));
            }
            for (int w = 1; w <= m - 1; ++w) {
                Rat c = -Rat(sn) * f / (den * detail::pow2_rat(2 * w) *
                                        rat_factorial(2 * m - 2 * w));
                if (w % 2 == 1) c = -c;
                v += to_real(c) * tb1(2 * m - 2 * w) * (Sn(2 * w, false) - Sn(2 * w, true));
            }
            return v;
        }
        case XnVariant::OddOdd: {
            const Rat f = rat_factorial(2 * m - 1);
            const Rat den(2 * n);
            v -= to_real(Rat(1 - sn) / den) * tb1(2 * m - 1);
            v += to_real(Rat((m % 2 == 0) ? sn : -sn) * f /
                         (detail::pow2_rat(2 * m - 1) * den)) *
                 Tn(2 * m - 1, true);
            for (int u = 1; u <= m - 1; ++u) {
                Rat c = -Rat(sn) * f / (den * rat_factorial(2 * m - 2 * u) *
                                        detail::pow2_rat(2 * u - 1));
                if (u % 2 == 1) c = -c;
                v += to_real(c) * Tn(2 * u - 1, false) * A(2 * m - 2 * u);
            }
            for (int w = 1; w <= m - 1; ++w) {
                Rat c = Rat(sn) * f / (den * detail::pow2_rat(2 * w - 1) *
                                       rat_factorial(2 * m - 2 * w));
                if (w % 2 == 1) c = -c;
                v += to_real(c) * tb1(2 * m - 2 * w) *
                     (Tn(2 * w - 1, false) + Tn(2 * w - 1, true));
            }
            for (int w = 1; w <= m - 1; ++w) {
                Rat c = Rat(sn) * f / (den * detail::pow2_rat(2 * w) *
                                       rat_factorial(2 * m - 2 * w - 1));
                if (w % 2 == 1) c = -c;
                v += to_real(c) * tb1(2 * m - 2 * w - 1) * (Sn(2 * w, false) - Sn(2 * w, true));
            }
            return v;
        }
    }
    throw std::logic_error("xn_arctan_rhs: unknown variant");
}

// |quadrature LHS - assembled RHS| for the four x^.. arctan^.. families.
inline Real verify_xn_arctan(int n, int m, XnVariant var, int digits) {
    PrecisionGuard guard(digits + 15);
    int xp = 0, ap = 0;
    switch (var) {
        case XnVariant::EvenEven: xp = 2 * n - 2, ap = 2 * m; break;
        case XnVariant::EvenOdd: xp = 2 * n - 2, ap = 2 * m - 1; break;
        case XnVariant::OddEven: xp = 2 * n - 1, ap = 2 * m; break;
        case XnVariant::OddOdd: xp = 2 * n - 1, ap = 2 * m - 1; break;
    }
    Real lhs = quad_xn_arctan(xp, ap, digits);
    Real rhs = xn_arctan_rhs(n, m, var, digits);
    return boost::multiprecision::abs(lhs - rhs);
}

// |quadrature - RHS| for int_0^1 arctan^{2m}(x)/x dx (odd_power = false) or
// int_0^1 arctan^{2m+1}(x)/x dx (odd_power = true), where the RHS mixes
// S(2,{1}..,b1) / T(2,{1}..,b1) values, powers of pi/4, and A(p).
inline Real verify_amtv_amsv_relation(int m, bool odd_power, int digits) {
    if (m < 1) throw std::domain_error("verify_amtv_amsv_relation: m must be >= 1");
    PrecisionGuard guard(digits + 15);
    const Real pi = const_pi();
    auto tb1 = [&](int j) { return detail::int_pow(-pi / 4, j); };
    auto A = [&](int p) { return eval_closed_form(arctan_power_integral(p), digits); };
    auto fam = [&](Family fm, int ones, bool bar) -> Real {
        FamilyIndex f;
        f.family = fm;
        f.comps.emplace_back(2, +1);
        for (int i = 0; i < ones; ++i) f.comps.emplace_back(1, +1);
        if (bar) f.comps.emplace_back(1, -1);
        auto [c, idx] = specialize(f);
        return to_real(c) * eval_index(idx, digits).value;
    };
    const Real t2sum = pi * pi / 8 - const_catalan();  // t(2) + t(b2)
    Real rhs(0);
    if (!odd_power) {
        const Rat f = rat_factorial(2 * m - 1);
        rhs += tb1(2 * m - 1) * t2sum;
        {
            Rat c = f / detail::pow2_rat(2 * m);
            if (m % 2 == 1) c = -c;
            rhs += to_real(c) * fam(Family::AMSV, 2 * m - 2, true);
        }
        for (int u = 0; u <= m - 1; ++u) {
            Rat c = f / (rat_factorial(2 * m - 2 * u - 1) * detail::pow2_rat(2 * u + 1));
            if (u % 2 == 1) c = -c;
            rhs += to_real(c) * A(2 * m - 2 * u - 1) * fam(Family::AMTV, 2 * u, false);
        }
        for (int w = 1; w <= m - 1; ++w) {
            Rat c = f / (detail::pow2_rat(2 * w + 1) * rat_factorial(2 * m - 2 * w - 1));
            if (w % 2 == 1) c = -c;  // -(-1)^{w+1} = (-1)^w
            rhs += to_real(c) * tb1(2 * m - 2 * w - 1) *
                   (fam(Family::AMTV, 2 * w, false) + fam(Family::AMTV, 2 * w - 1, true));
        }
        for (int w = 1; w <= m - 1; ++w) {
            Rat c = -f / (detail::pow2_rat(2 * w) * rat_factorial(2 * m - 2 * w));
            if (w % 2 == 1) c = -c;
            rhs += to_real(c) * tb1(2 * m - 2 * w) *
                   (fam(Family::AMSV, 2 * w - 1, false) - fam(Family::AMSV, 2 * w - 2, true));
        }
        Real lhs = quad_arctan_over_x(2 * m, digits);
        return boost::multiprecision::abs(lhs - rhs);
    }
    const Rat f = rat_factorial(2 * m);
    rhs -= tb1(2 * m) * t2sum;
    {
        Rat c = -f / detail::pow2_rat(2 * m + 1);
        if (m % 2 == 1) c = -c;
        rhs += to_real(c) * fam(Family::AMTV, 2 * m - 1, true);
    }
    for (int u = 0; u <= m - 1; ++u) {
        Rat c = f / (rat_factorial(2 * m - 2 * u) * detail::pow2_rat(2 * u + 1));
        if (u % 2 == 1) c = -c;
        rhs += to_real(c) * A(2 * m - 2 * u) * fam(Family::AMTV, 2 * u, false);
    }
    for (int w = 1; w <= m - 1; ++w) {
        Rat c = -f / (detail::pow2_rat(2 * w + 1) * rat_factorial(2 * m - 2 * w));
        if (w % 2 == 1) c = -c;
        rhs += to_real(c) * tb1(2 * m - 2 * w) *
               (fam(Family::AMTV, 2 * w, false) + fam(Family::AMTV, 2 * w - 1, true));
    }
    for (int w = 0; w <= m - 1; ++w) {
        Rat c = -f / (detail::pow2_rat(2 * w + 2) * rat_factorial(2 * m - 2 * w - 1));
        if (w % 2 == 1) c = -c;
        rhs += to_real(c) * tb1(2 * m - 2 * w - 1) *
               (fam(Family::AMSV, 2 * w + 1, false) - fam(Family::AMSV, 2 * w, true));
    }
    Real lhs = quad_arctan_over_x(2 * m + 1, digits);
    return boost::multiprecision::abs(lhs - rhs);
}

}  // namespace ammv
