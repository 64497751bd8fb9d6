#pragma once

#include "ammv/index.hpp"
#include "ammv/lincomb.hpp"

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ammv {

// Symbolic transcendental constants. Zeta/Beta/LiHalf/ImLiW carry a
// positive integer parameter; the others ignore it.
enum class CK { Pi, Log2, Zeta, Beta, LiHalf, ImLiW, Zeta5b1 };

struct ConstSymbol {
    CK kind;
    int n = 0;

    int weight() const {
        switch (kind) {
            case CK::Pi:
            case CK::Log2: return 1;
            case CK::Zeta:
            case CK::Beta:
            case CK::LiHalf:
            case CK::ImLiW: return n;
            case CK::Zeta5b1: return 6;
        }
        return 0;
    }

    friend bool operator==(const ConstSymbol&, const ConstSymbol&) = default;
    friend std::strong_ordering operator<=>(const ConstSymbol& a, const ConstSymbol& b) {
        if (a.kind != b.kind)
            return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
        return a.n <=> b.n;
    }

    std::string str() const {
        std::ostringstream os;
        switch (kind) {
            case CK::Pi: os << "pi"; break;
            case CK::Log2: os << "log2"; break;
            case CK::Zeta: os << "zeta(" << n << ")"; break;
            case CK::Beta: os << "beta(" << n << ")"; break;
            case CK::LiHalf: os << "Li" << n << "(1/2)"; break;
            case CK::ImLiW: os << "ImLi" << n << "((1+i)/2)"; break;
            case CK::Zeta5b1: os << "zeta(-5,1)"; break;
        }
        return os.str();
    }
};

inline ConstSymbol sym_pi() { return {CK::Pi, 0}; }
inline ConstSymbol sym_log2() { return {CK::Log2, 0}; }
inline ConstSymbol sym_zeta(int n) { return {CK::Zeta, n}; }
inline ConstSymbol sym_beta(int n) { return {CK::Beta, n}; }

// Product of constant symbols with positive integer exponents.
struct ConstMonomial {
    std::map<ConstSymbol, int> exps;

    static ConstMonomial one() { return {}; }
    static ConstMonomial power(ConstSymbol s, int e) {
        ConstMonomial m;
        if (e != 0) m.exps[s] = e;
        return m;
    }

    bool is_one() const { return exps.empty(); }

    int weight() const {
        int w = 0;
        for (const auto& [s, e] : exps) w += s.weight() * e;
        return w;
    }

    friend ConstMonomial operator*(const ConstMonomial& a, const ConstMonomial& b) {
        ConstMonomial r = a;
        for (const auto& [s, e] : b.exps) {
            int& v = r.exps[s];
            v += e;
            if (v == 0) r.exps.erase(s);
        }
        return r;
    }

    friend bool operator==(const ConstMonomial&, const ConstMonomial&) = default;
    friend std::strong_ordering operator<=>(const ConstMonomial& a, const ConstMonomial& b) {
        auto ai = a.exps.begin(), bi = b.exps.begin();
        for (; ai != a.exps.end() && bi != b.exps.end(); ++ai, ++bi) {
            if (auto c = ai->first <=> bi->first; c != 0) return c;
            if (auto c = ai->second <=> bi->second; c != 0) return c;
        }
        if (ai != a.exps.end()) return std::strong_ordering::greater;
        if (bi != b.exps.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (exps.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [s, e] : exps) {
            if (!first) os << "*";
            first = false;
            os << s.str();
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }
};

// Q-linear combination of constant monomials: the symbolic closed forms
// used throughout (rho coefficients, value-identity right-hand sides).
using ClosedForm = LinComb<ConstMonomial>;

inline ClosedForm cf_one(Rat c = Rat(1)) { return ClosedForm::unit(ConstMonomial::one(), c); }
inline ClosedForm cf_sym(ConstSymbol s, Rat c = Rat(1)) {
    return ClosedForm::unit(ConstMonomial::power(s, 1), c);
}

inline ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
    return bilinear(a, b, [](const ConstMonomial& x, const ConstMonomial& y) {
        return ClosedForm::unit(x * y);
    });
}

// Basis element of a regularized value: constant monomial times an AMMV symbol.
struct RegBasis {
    ConstMonomial mono;
    Index idx;

    int weight() const { return mono.weight() + idx.weight(); }

    friend bool operator==(const RegBasis&, const RegBasis&) = default;
    friend std::strong_ordering operator<=>(const RegBasis& a, const RegBasis& b) {
        if (auto c = a.mono <=> b.mono; c != 0) return c;
        return a.idx <=> b.idx;
    }

    std::string str() const {
        if (mono.is_one()) return idx.str();
        if (idx.comps.empty()) return mono.str();
        return mono.str() + "*" + idx.str();
    }
};

// Polynomial in the regularization variable T with LinComb<RegBasis>
// coefficients, finitely supported over nonnegative degrees.
class TPoly {
  public:
    std::map<int, LinComb<RegBasis>> coeffs;

    TPoly() = default;

    static TPoly zero() { return {}; }
    static TPoly term(int deg, LinComb<RegBasis> lc) {
        TPoly p;
        if (!lc.empty()) p.coeffs[deg] = std::move(lc);
        return p;
    }
    // Constant polynomial c * (mono) with no index part.
    static TPoly constant(ClosedForm cf) {
        LinComb<RegBasis> lc;
        for (const auto& [m, c] : cf) lc.add(RegBasis{m, Index{}}, c);
        return term(0, std::move(lc));
    }
    // The monomial T^n.
    static TPoly T_pow(int n, Rat c = Rat(1)) {
        return term(n, LinComb<RegBasis>::unit(RegBasis{ConstMonomial::one(), Index{}}, c));
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }

    LinComb<RegBasis> coeff(int deg) const {
        auto it = coeffs.find(deg);
        return it == coeffs.end() ? LinComb<RegBasis>{} : it->second;
    }

    TPoly& operator+=(const TPoly& o) {
        for (const auto& [d, lc] : o.coeffs) {
            auto& mine = coeffs[d];
            mine += lc;
            if (mine.empty()) coeffs.erase(d);
        }
        return *this;
    }
    TPoly& operator-=(const TPoly& o) {
        for (const auto& [d, lc] : o.coeffs) {
            auto& mine = coeffs[d];
            mine -= lc;
            if (mine.empty()) coeffs.erase(d);
        }
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    TPoly operator-() const {
        TPoly r = *this;
        for (auto& [d, lc] : r.coeffs) lc = -lc;
        return r;
    }
    TPoly& operator*=(const Rat& c) {
        if (c == 0) {
            coeffs.clear();
            return *this;
        }
        for (auto& [d, lc] : coeffs) lc *= c;
        return *this;
    }
    friend TPoly operator*(TPoly p, const Rat& c) { return p *= c; }
    friend TPoly operator*(const Rat& c, TPoly p) { return p *= c; }

    friend bool operator==(const TPoly&, const TPoly&) = default;

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            if (it->first == 0)
                os << "[" << it->second.str() << "]";
            else
                os << "T^" << it->first << "*[" << it->second.str() << "]";
        }
        return os.str();
    }
};

// Product where the left factor carries no index part in any term: the
// constant monomials multiply in, the index of the right factor survives.
inline TPoly mul_pure(const TPoly& pure, const TPoly& gen) {
    TPoly out;
    for (const auto& [da, la] : pure.coeffs)
        for (const auto& [ba, ca] : la) {
            if (!ba.idx.comps.empty())
                throw std::logic_error("mul_pure: left factor has an index part");
            for (const auto& [db, lb] : gen.coeffs) {
                LinComb<RegBasis> prod;
                for (const auto& [bb, cb] : lb)
                    prod.add(RegBasis{ba.mono * bb.mono, bb.idx}, ca * cb);
                auto& cell = out.coeffs[da + db];
                cell += prod;
                if (cell.empty()) out.coeffs.erase(da + db);
            }
        }
    return out;
}

}  // namespace ammv
