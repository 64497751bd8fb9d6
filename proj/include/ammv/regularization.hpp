#pragma once

#include "ammv/algebra.hpp"
#include "ammv/tpoly.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ammv {

inline Rat rat_factorial(int n) {
    Rat r(1);
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Rat rat_binom(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (int j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
    return r;
}

// --- the comparison map rho -------------------------------------------------
//
// rho(e^{Tu}) = exp(sum_{n>=2} (-1)^n zeta(n) u^n / n) e^{(T-log2)u}
// so rho(T^n) = n! sum_{j<=n} a_j (T-log2)^{n-j} / (n-j)!  with
// a_j the u^j coefficients of the exponential prefactor:
//   a_0 = 1,  j*a_j = sum_{n=2}^{j} (-1)^n zeta(n) a_{j-n}.
inline const ClosedForm& rho_coefficient(int j) {
    thread_local std::vector<ClosedForm> cache{cf_one()};
    while (static_cast<int>(cache.size()) <= j) {
        const int m = static_cast<int>(cache.size());
        ClosedForm acc;
        for (int n = 2; n <= m; ++n) {
            Rat sgn = (n % 2 == 0) ? Rat(1) : Rat(-1);
            acc += (cf_sym(sym_zeta(n), sgn) * cache[m - n]);
        }
        acc *= Rat(1, m);
        cache.push_back(std::move(acc));
    }
    return cache[j];
}

// (T - log2)^k as a pure (index-free) TPoly.
inline TPoly t_minus_log2_pow(int k) {
    TPoly out;
    for (int i = 0; i <= k; ++i) {
        Rat c = rat_binom(k, i);
        if ((k - i) % 2 == 1) c = -c;
        ClosedForm cf = ClosedForm::unit(ConstMonomial::power(sym_log2(), k - i), c);
        out += mul_pure(TPoly::T_pow(i), TPoly::constant(cf));
    }
    return out;
}

inline TPoly rho(const TPoly& p) {
    TPoly out;
    for (const auto& [n, lc] : p.coeffs) {
        for (int j = 0; j <= n; ++j) {
            // n!/(n-j)! * a_j * (T-log2)^{n-j}
            TPoly pure = mul_pure(TPoly::constant(rho_coefficient(j)), t_minus_log2_pow(n - j));
            Rat fall(1);
            for (int t = n - j + 1; t <= n; ++t) fall *= t;
            pure *= fall;
            out += mul_pure(pure, TPoly::term(0, lc));
        }
    }
    return out;
}

// --- regularized evaluation maps --------------------------------------------
//
// Both maps extend the evaluation on admissible symbols by assigning the two
// divergent depth-one symbols a value linear in T, then strip leading
// divergent atoms through the respective product.  For a uniform leading run
// d^m u the product d * (d^{m-1}u) contains the original symbol with
// multiplicity exactly m, every other term having a strictly shorter leading
// run; solving for the symbol and dividing by m terminates.  A *mixed*
// leading run is not determined by the two assigned values (the permuted
// runs satisfy identical equations), so it is rejected.

inline TPoly stuffle_value_of(const Component& d) {
    // (1,+1,+1) -> T ; (1,+1,-1) -> T + 2 log2
    TPoly v = TPoly::T_pow(1);
    if (d.eps == -1) v += TPoly::constant(cf_sym(sym_log2(), Rat(2)));
    return v;
}

inline TPoly shuffle_value_of(const Letter& a) {
    // w_{+1}^{+1} -> T - log2 ; w_{+1}^{-1} -> T + log2
    TPoly v = TPoly::T_pow(1);
    v += TPoly::constant(cf_sym(sym_log2(), Rat(a.eps == +1 ? -1 : +1)));
    return v;
}

inline const TPoly& stuffle_reg(const Index& i);

namespace detail {

inline TPoly stuffle_reg_compute(const Index& i) {
    if (i.admissible())
        return TPoly::term(0, LinComb<RegBasis>::unit(RegBasis{ConstMonomial::one(), i}));
    // Maximal leading run of divergent components.
    int m = 0;
    const int r = i.depth();
    while (m < r && i.comps[m].s == 1 && i.comps[m].sigma == +1) ++m;
    for (int t = 1; t < m; ++t)
        if (i.comps[t].eps != i.comps[0].eps)
            throw std::domain_error(
                "stuffle_reg: mixed divergent prefix is not determined by the "
                "regularization data: " + i.str());
    const Component d = i.comps[0];
    Index rest{std::vector<Component>(i.comps.begin() + 1, i.comps.end())};

    LinComb<Index> expansion = stuffle(Index{{d}}, rest);
    const Rat self = expansion.coeff(i);
    if (self != Rat(m)) throw std::logic_error("stuffle_reg: self multiplicity != m");

    TPoly out = mul_pure(stuffle_value_of(d), stuffle_reg(rest));
    for (const auto& [idx, c] : expansion) {
        if (idx == i) continue;
        out -= c * stuffle_reg(idx);
    }
    out *= Rat(1, m);
    return out;
}

}  // namespace detail

inline const TPoly& stuffle_reg(const Index& i) {
    thread_local std::map<Index, TPoly> memo;
    auto it = memo.find(i);
    if (it != memo.end()) return it->second;
    TPoly v = detail::stuffle_reg_compute(i);
    return memo.emplace(i, std::move(v)).first->second;
}

inline const TPoly& shuffle_reg(const Word& w);

namespace detail {

inline TPoly shuffle_reg_compute(const Word& w) {
    if (!w.in_a1()) throw std::invalid_argument("shuffle_reg: word ends in w0: " + w.str());
    if (w.admissible()) {
        auto [sgn, idx] = q_map(w);
        return TPoly::term(
            0, LinComb<RegBasis>::unit(RegBasis{ConstMonomial::one(), idx}, Rat(sgn)));
    }
    int m = 0;
    const int len = w.weight();
    while (m < len && w.letters[m].divergent()) ++m;
    for (int t = 1; t < m; ++t)
        if (w.letters[t].eps != w.letters[0].eps)
            throw std::domain_error(
                "shuffle_reg: mixed divergent prefix is not determined by the "
                "regularization data: " + w.str());
    const Letter a = w.letters[0];
    Word rest{std::vector<Letter>(w.letters.begin() + 1, w.letters.end())};

    LinComb<Word> expansion = shuffle(Word{{a}}, rest);
    const Rat self = expansion.coeff(w);
    if (self != Rat(m)) throw std::logic_error("shuffle_reg: self multiplicity != m");

    TPoly out = mul_pure(shuffle_value_of(a), shuffle_reg(rest));
    for (const auto& [word, c] : expansion) {
        if (word == w) continue;
        out -= c * shuffle_reg(word);
    }
    out *= Rat(1, m);
    return out;
}

}  // namespace detail

inline const TPoly& shuffle_reg(const Word& w) {
    thread_local std::map<Word, TPoly> memo;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    TPoly v = detail::shuffle_reg_compute(w);
    return memo.emplace(w, std::move(v)).first->second;
}

// --- constants back to symbols ----------------------------------------------
//
// log2 = -M(b1) and zeta(n) = 2^{n-1} M(n); monomials expand through the
// stuffle product so the result is a homogeneous LinComb over indices.
inline LinComb<Index> constant_to_index(const ConstMonomial& mono) {
    LinComb<Index> acc = LinComb<Index>::unit(Index{});
    for (const auto& [s, e] : mono.exps) {
        LinComb<Index> factor;
        switch (s.kind) {
            case CK::Log2:
                factor.add(Index{{Component{1, -1, +1}}}, Rat(-1));
                break;
            case CK::Zeta: {
                Rat c(1);
                for (int t = 1; t < s.n; ++t) c *= 2;
                factor.add(Index{{Component{s.n, +1, +1}}}, c);
                break;
            }
            default:
                throw std::domain_error("constant_to_index: no AMMV image for " + s.str());
        }
        for (int t = 0; t < e; ++t) acc = stuffle(acc, factor);
    }
    return acc;
}

inline LinComb<Index> reg_basis_to_indices(const RegBasis& b, const Rat& c) {
    LinComb<Index> img = constant_to_index(b.mono);
    if (!b.idx.comps.empty()) img = stuffle(img, LinComb<Index>::unit(b.idx));
    img *= c;
    return img;
}

// --- relations ---------------------------------------------------------------

struct Relation {
    int weight = 0;
    LinComb<Index> terms;
    std::string provenance;
    // Filled by numeric validation.
    double residual = -1.0;
    int digits = 0;

    bool trivial() const { return terms.empty(); }

    // Scale to coprime integers with the leading (canonically smallest)
    // symbol positive.
    void normalize() {
        if (terms.empty()) return;
        Int num_gcd(0), den_lcm(1);
        for (const auto& [idx, c] : terms) {
            num_gcd = boost::multiprecision::gcd(num_gcd, Int(boost::multiprecision::numerator(c)));
            den_lcm = boost::multiprecision::lcm(den_lcm,
                                                 Int(boost::multiprecision::denominator(c)));
        }
        Rat scale = num_gcd == 0 ? Rat(1) : Rat(den_lcm, num_gcd);
        if (terms.begin()->second * scale < 0) scale = -scale;
        terms *= scale;
    }

    std::string str() const {
        std::ostringstream os;
        os << "0 = " << terms.str() << "   [" << provenance << ", w=" << weight << "]";
        return os.str();
    }
};

// Finite double shuffle: both indices admissible, the two product images of
// the same pair agree.
inline Relation finite_dbsf(const Index& i, const Index& j) {
    if (!i.admissible() || !j.admissible())
        throw std::invalid_argument("finite_dbsf: both indices must be admissible");
    Relation r;
    r.weight = i.weight() + j.weight();
    r.terms = shuffle_on_indices(i, j) - stuffle(i, j);
    r.provenance = "finite-dbsf " + i.str() + " x " + j.str();
    r.normalize();
    return r;
}

// Regularized double shuffle for a single carrier index k: the difference
//   sign(p(k)) * shuffle_reg(word(p(k))) - rho(stuffle_reg(k))
// vanishes identically in T, so each T-degree coefficient is a homogeneous
// relation among convergent symbols once constants are expanded back.
inline std::vector<Relation> reg_dbsf_carrier(const Index& k) {
    auto [sgn, w] = p_map(k);
    TPoly diff = Rat(sgn) * shuffle_reg(w) - rho(stuffle_reg(k));
    std::vector<Relation> out;
    for (const auto& [deg, lc] : diff.coeffs) {
        Relation r;
        r.weight = k.weight() - deg;
        for (const auto& [b, c] : lc) r.terms += reg_basis_to_indices(b, c);
        r.provenance = "reg-dbsf " + k.str() + " @T^" + std::to_string(deg);
        if (r.trivial()) continue;
        r.normalize();
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<Relation> reg_dbsf(const Index& i, const Index& j) {
    if (i.admissible()) {
        Relation r = finite_dbsf(i, j);
        if (r.trivial()) return {};
        return {r};
    }
    if (!j.admissible())
        throw std::invalid_argument("reg_dbsf: second index must be admissible");
    Index k = i;
    k.comps.insert(k.comps.end(), j.comps.begin(), j.comps.end());
    return reg_dbsf_carrier(k);
}

// A carrier is usable when both regularizations are determined, i.e. neither
// side has a mixed leading divergent run.
inline bool reg_carrier_ok(const Index& k) {
    if (k.comps.empty() || k.admissible()) return false;
    int m = 0;
    const int r = k.depth();
    while (m < r && k.comps[m].s == 1 && k.comps[m].sigma == +1) ++m;
    for (int t = 1; t < m; ++t)
        if (k.comps[t].eps != k.comps[0].eps) return false;
    // Word side: within the run every letter is w_{+1}^{eps_j eps_{j+1}}.
    if (m >= 2) {
        const int eps_next = (m < r) ? k.comps[m].eps : +1;
        if (k.comps[m - 1].eps * eps_next != +1) return false;
    }
    return true;
}

}  // namespace ammv
