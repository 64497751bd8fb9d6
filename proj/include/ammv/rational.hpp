#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <sstream>
#include <string>

namespace ammv {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Element of Q(i), kept as an exact pair of rationals.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(r) {}

    static GaussRat unit_i() { return GaussRat{Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) = default;
    friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
        if (a.re != b.re)
            return a.re < b.re ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.im != b.im)
            return a.im < b.im ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::ostringstream os;
        if (im == 0) {
            os << re;
        } else if (re == 0) {
            os << im << "*I";
        } else {
            os << "(" << re << (im > 0 ? "+" : "") << im << "*I)";
        }
        return os.str();
    }
};

}  // namespace ammv
