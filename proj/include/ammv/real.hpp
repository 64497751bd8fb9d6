#pragma once

#include "ammv/rational.hpp"
#include "ammv/tpoly.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace ammv {

// Arbitrary-precision real; precision of each fresh variable is taken from
// the thread-local default at construction time.
using Real = boost::multiprecision::mpfr_float;

// RAII scope for the working decimal precision.  The underlying default is
// a process-wide atomic, so concurrent guards are only safe when every
// thread requests the same precision; all parallel paths here run a whole
// command at one fixed digit count.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

inline Real to_real(const Rat& q) {
    return Real(boost::multiprecision::numerator(q)) /
           Real(boost::multiprecision::denominator(q));
}

inline Real to_real(const Int& n) { return Real(n); }

// Minimal complex pair over Real.
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    friend Complex operator*(const Real& c, const Complex& a) { return {c * a.re, c * a.im}; }
    friend Complex operator*(const Complex& a, const Real& c) { return {a.re * c, a.im * c}; }
    friend Complex operator/(const Complex& a, const Real& c) { return {a.re / c, a.im / c}; }
    Complex& operator/=(const Real& c) {
        re /= c;
        im /= c;
        return *this;
    }

    Real abs() const {
        using boost::multiprecision::sqrt;
        return sqrt(re * re + im * im);
    }
};

inline Real abs_of(const Real& x) { return boost::multiprecision::abs(x); }
inline Real abs_of(const Complex& z) { return z.abs(); }

// --- constants at the current working precision -------------------------------

inline Real const_pi() {
    Real x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

inline Real const_log2() {
    Real x;
    mpfr_const_log2(x.backend().data(), MPFR_RNDN);
    return x;
}

inline Real const_catalan() {
    Real x;
    mpfr_const_catalan(x.backend().data(), MPFR_RNDN);
    return x;
}

inline Real const_zeta(unsigned n) {
    if (n < 2) throw std::invalid_argument("const_zeta: need n >= 2");
    Real x;
    mpfr_zeta_ui(x.backend().data(), n, MPFR_RNDN);
    return x;
}

// Dirichlet beta(n) = sum_{k>=0} (-1)^k/(2k+1)^n, accelerated with the
// Cohen-Rodriguez Villegas-Zagier Chebyshev scheme (error ~ 5.83^-terms).
inline Real const_beta(unsigned n) {
    if (n == 1) return const_pi() / 4;
    if (n == 2) return const_catalan();
    const unsigned digits = Real::default_precision();
    const int terms = static_cast<int>(1.32 * digits) + 8;
    Real d = boost::multiprecision::pow(Real(3) + 2 * boost::multiprecision::sqrt(Real(2)),
                                        terms);
    d = (d + 1 / d) / 2;
    Real b(-1), c(-d), s(0);
    for (int k = 0; k < terms; ++k) {
        c = b - c;
        Real ak = 1 / boost::multiprecision::pow(Real(2 * k + 1), static_cast<int>(n));
        s += c * ak;
        b *= Real(k + terms) * (k - terms) / ((k + Real(1) / 2) * (k + 1));
    }
    return s / d;
}

// Li_k(1/2) by direct series (one bit per term).
inline Real li_half(unsigned k) {
    const unsigned digits = Real::default_precision();
    const int terms = static_cast<int>(3.33 * digits) + 10;
    Real s(0), p(1);
    for (int m = 1; m <= terms; ++m) {
        p /= 2;
        s += p / boost::multiprecision::pow(Real(m), static_cast<int>(k));
    }
    return s;
}

// Im Li_k((1+i)/2) by direct series; |z| = 1/sqrt(2).
inline Real im_li_w(unsigned k) {
    const unsigned digits = Real::default_precision();
    const int terms = static_cast<int>(6.65 * digits) + 16;
    Complex z{Real(1) / 2, Real(1) / 2};
    Complex p{Real(1), Real(0)};
    Real s(0);
    for (int m = 1; m <= terms; ++m) {
        p *= z;
        s += p.im / boost::multiprecision::pow(Real(m), static_cast<int>(k));
    }
    return s;
}

}  // namespace ammv
