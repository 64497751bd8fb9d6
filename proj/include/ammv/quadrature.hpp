#pragma once

#include "ammv/real.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <stdexcept>

namespace ammv {

// tanh-sinh quadrature over a finite interval at roughly `digits` accuracy.
// A fresh integrator is built per call: boost caches its abscissas at the
// precision current when they are first used, so the integrator must not
// outlive the precision guard.
template <class F>
Real integrate(F&& f, const Real& a, const Real& b, int digits) {
    PrecisionGuard guard(digits + 15);
    // The library default min_complement is derived from the mpfr min value,
    // whose transform overflows the node-count truncation; cap how close to
    // the endpoints nodes may fall at something the working precision resolves.
    Real min_comp = Real(1);
    for (int i = 0; i < 2 * (digits + 15); ++i) min_comp /= 10;
    boost::math::quadrature::tanh_sinh<Real> integ(15, min_comp);
    Real tol = Real(1);
    for (int i = 0; i < digits + 5; ++i) tol /= 10;
    Real error(0), l1(0);
    Real v = integ.integrate(std::forward<F>(f), Real(a), Real(b), tol, &error, &l1);
    return v;
}

// int_0^upper x^p cot(x) dx, upper in (0, pi/2].  The integrand extends
// continuously to 0 (x^p cot x ~ x^{p-1}); tanh-sinh never hits the endpoint.
inline Real quad_xp_cot(int p, const Real& upper, int digits) {
    if (p < 1) throw std::domain_error("quad_xp_cot: p must be >= 1");
    PrecisionGuard guard(digits + 15);
    auto f = [p](const Real& x) -> Real {
        Real t = cos(x) / sin(x);
        for (int i = 0; i < p; ++i) t *= x;
        return t;
    };
    return integrate(f, Real(0), upper, digits);
}

// int_0^1 arctan^p(x) dx.
inline Real quad_arctan_pow(int p, int digits) {
    if (p < 1) throw std::domain_error("quad_arctan_pow: p must be >= 1");
    PrecisionGuard guard(digits + 15);
    auto f = [p](const Real& x) -> Real {
        Real a = atan(x), t = a;
        for (int i = 1; i < p; ++i) t *= a;
        return t;
    };
    return integrate(f, Real(0), Real(1), digits);
}

// int_0^1 arctan^r(x)/x dx; the integrand behaves like x^{r-1} at 0.
inline Real quad_arctan_over_x(int r, int digits) {
    if (r < 1) throw std::domain_error("quad_arctan_over_x: r must be >= 1");
    PrecisionGuard guard(digits + 15);
    auto f = [r](const Real& x) -> Real {
        Real a = atan(x), t = a / x;
        for (int i = 1; i < r; ++i) t *= a;
        return t;
    };
    return integrate(f, Real(0), Real(1), digits);
}

// int_0^1 x^a arctan^b(x) dx.
inline Real quad_xn_arctan(int a, int b, int digits) {
    if (a < 0 || b < 1) throw std::domain_error("quad_xn_arctan: need a >= 0, b >= 1");
    PrecisionGuard guard(digits + 15);
    auto f = [a, b](const Real& x) -> Real {
        Real at = atan(x), t(1);
        for (int i = 0; i < a; ++i) t *= x;
        for (int i = 0; i < b; ++i) t *= at;
        return t;
    };
    return integrate(f, Real(0), Real(1), digits);
}

}  // namespace ammv
