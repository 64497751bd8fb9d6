#pragma once

#include "ammv/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ammv {

// One-level PSLQ over mpfr reals.
//
// Given values believed accurate to `digits` decimal digits, searches for a
// nonzero integer vector c with sum_i c_i v_i = 0.  A candidate is accepted
// only when every |c_i| fits in max_coeff_bits bits and the combination
// re-evaluated from the original inputs stays below 10^{-digits/2}.
//
// `diagnostic` separates the two negative outcomes: the algorithm can prove
// that no relation exists with coefficient norm under the cap ("no relation
// within coefficient bound"), or it runs out of usable precision first, in
// which case callers must not read the result as independence.
struct PslqResult {
    bool found = false;
    std::vector<Int> coeffs;
    Real residual{0};
    std::string diagnostic;

    std::string str() const {
        if (!found) return diagnostic;
        std::string s = "(";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ", ";
            s += coeffs[i].str();
        }
        s += ")";
        return s;
    }
};

namespace detail {

inline Real pow10(int k) { return boost::multiprecision::pow(Real(10), k); }

}  // namespace detail

inline PslqResult pslq(const std::vector<Real>& values, int digits, int max_coeff_bits = 40) {
    using boost::multiprecision::abs;
    using boost::multiprecision::round;
    using boost::multiprecision::sqrt;

    const int n = static_cast<int>(values.size());
    if (n < 2) throw std::invalid_argument("pslq: need at least two values");
    if (digits < 10) throw std::invalid_argument("pslq: need digits >= 10");
    if (max_coeff_bits < 1 || max_coeff_bits > 256)
        throw std::invalid_argument("pslq: max_coeff_bits out of range");

    PslqResult res;
    PrecisionGuard guard(static_cast<unsigned>(digits) + 30);
    const unsigned wp = Real::default_precision();

    std::vector<Real> x(n, Real(0));
    for (int i = 0; i < n; ++i) {
        x[i] = values[i];
        x[i].precision(wp);
    }

    const Real detect = detail::pow10(-(digits - 6));
    const Real accept = detail::pow10(-(digits / 2));

    auto verify = [&](std::vector<Int> c) -> bool {
        bool nonzero = false;
        for (const Int& ci : c) nonzero = nonzero || ci != 0;
        if (!nonzero) return false;
        Int limit = Int(1) << max_coeff_bits;
        for (const Int& ci : c)
            if (abs(ci) >= limit) {
                res.diagnostic = "candidate exceeds coefficient bound 2^" +
                                 std::to_string(max_coeff_bits);
                return false;
            }
        Real r(0);
        for (int i = 0; i < n; ++i) r += to_real(c[i]) * x[i];
        if (abs(r) >= accept) {
            res.diagnostic = "candidate failed re-verification at full precision";
            return false;
        }
        for (int i = 0; i < n; ++i)
            if (c[i] != 0) {
                if (c[i] < 0)
                    for (Int& ci : c) ci = -ci;
                break;
            }
        res.found = true;
        res.coeffs = std::move(c);
        res.residual = abs(r);
        res.diagnostic = "found";
        return true;
    };

    // A value that is already zero to the stated accuracy is its own relation.
    for (int i = 0; i < n; ++i)
        if (abs(x[i]) < detail::pow10(-digits)) {
            std::vector<Int> c(n, Int(0));
            c[i] = 1;
            if (verify(std::move(c))) return res;
            res.found = false;
            res.diagnostic = "input " + std::to_string(i) + " is zero to working accuracy";
            return res;
        }

    // Normalized vector and the partial-norm triangular H.
    Real norm(0);
    for (int i = 0; i < n; ++i) norm += x[i] * x[i];
    norm = sqrt(norm);
    std::vector<Real> y(n, Real(0));
    for (int i = 0; i < n; ++i) y[i] = x[i] / norm;

    std::vector<Real> s(n, Real(0));
    {
        Real acc(0);
        for (int k = n - 1; k >= 0; --k) {
            acc += y[k] * y[k];
            s[k] = sqrt(acc);
        }
    }

    std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, Real(0)));
    for (int j = 0; j < n - 1; ++j) {
        H[j][j] = s[j + 1] / s[j];
        for (int i = j + 1; i < n; ++i) H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1]);
    }

    std::vector<std::vector<Int>> B(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) B[i][i] = 1;

    auto hermite_reduce = [&]() {
        for (int i = 1; i < n; ++i) {
            for (int j = std::min(i - 1, n - 2); j >= 0; --j) {
                if (H[j][j] == 0) continue;
                Real q = round(H[i][j] / H[j][j]);
                if (q == 0) continue;
                Int t = q.convert_to<Int>();
                Real tr = to_real(t);
                y[j] += tr * y[i];
                for (int k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
                for (int k = 0; k < n; ++k) B[k][j] += t * B[k][i];
            }
        }
    };
    hermite_reduce();

    const Real gamma = sqrt(Real(4) / 3) + Real(1) / 100;
    const Real coeff_cap = sqrt(Real(n)) * boost::multiprecision::pow(Real(2), max_coeff_bits);
    const Real floor_h = detail::pow10(-(digits + 20));
    const long max_iters = 2000 + 400L * n * max_coeff_bits;

    for (long iter = 0; iter < max_iters; ++iter) {
        // Detection: a vanishing y entry names a B column as the relation.
        int im = 0;
        for (int i = 1; i < n; ++i)
            if (abs(y[i]) < abs(y[im])) im = i;
        if (abs(y[im]) < detect) {
            std::vector<Int> c(n);
            for (int i = 0; i < n; ++i) c[i] = B[i][im];
            if (verify(std::move(c))) return res;
            res.found = false;
            if (res.diagnostic.empty())
                res.diagnostic = "precision insufficient: detection fired without a usable candidate";
            return res;
        }

        // Norm bound: every relation satisfies |c| >= 1/max_j |H_jj|.
        Real hmax(0);
        for (int j = 0; j < n - 1; ++j) {
            Real a = abs(H[j][j]);
            if (a > hmax) hmax = a;
        }
        if (hmax == 0 || 1 / hmax > coeff_cap) {
            res.found = false;
            res.diagnostic = "no relation within coefficient bound 2^" +
                             std::to_string(max_coeff_bits);
            return res;
        }
        if (hmax < floor_h) {
            res.found = false;
            res.diagnostic = "precision insufficient: H degenerated below the noise floor";
            return res;
        }

        // Row selection by gamma^i |H_ii|, then swap and corner rotation.
        int m = 0;
        Real best(-1), g(1);
        for (int i = 0; i < n - 1; ++i) {
            Real v = g * abs(H[i][i]);
            if (v > best) {
                best = v;
                m = i;
            }
            g *= gamma;
        }
        std::swap(y[m], y[m + 1]);
        std::swap(H[m], H[m + 1]);
        for (int i = 0; i < n; ++i) std::swap(B[i][m], B[i][m + 1]);

        if (m < n - 2) {
            Real t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
            if (t0 != 0) {
                Real t1 = H[m][m] / t0, t2 = H[m][m + 1] / t0;
                for (int i = m; i < n; ++i) {
                    Real t3 = H[i][m], t4 = H[i][m + 1];
                    H[i][m] = t1 * t3 + t2 * t4;
                    H[i][m + 1] = t1 * t4 - t2 * t3;
                }
            }
        }
        hermite_reduce();
    }

    res.found = false;
    res.diagnostic = "precision insufficient: iteration cap reached";
    return res;
}

}  // namespace ammv
