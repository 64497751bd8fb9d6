#pragma once

#include "ammv/algebra.hpp"
#include "ammv/real.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ammv {

struct EvalResult {
    Real value;
    Real err;
};

struct EvalResultC {
    Complex value;
    Real err;
};

namespace detail {

inline Real int_pow(const Real& x, int e) {
    Real r(1), b = x;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

// Incremental nested prefix sums: inner[j] accumulates the chain sums over
// m_j > ... > m_r with m_j <= cursor.  Ascending-j updates use inner[j+1]
// before it absorbs the current m, giving the strict inequality m_j > m_{j+1}.
template <class Value, class TermFn>
class PrefixSweep {
  public:
    PrefixSweep(int r, TermFn term)
        : r_(r), term_(std::move(term)), inner_(r + 2, Value{Real(0)}) {
        inner_[r + 1] = Value{Real(1)};
    }

    void advance(long to, const std::set<long>& record, std::map<long, Value>& out) {
        for (long m = cursor_ + 1; m <= to; ++m) {
            for (int j = 1; j <= r_; ++j) {
                Value t{Real(0)};
                if (term_(m, j - 1, t)) inner_[j] += t * inner_[j + 1];
            }
            if (record.count(m)) out[m] = r_ == 0 ? inner_[r_ + 1] : inner_[1];
        }
        cursor_ = to;
    }

  private:
    int r_;
    TermFn term_;
    std::vector<Value> inner_;
    long cursor_ = 0;
};

struct NodePlan {
    std::vector<long> nodes;  // descending, all multiples of 4
    int K = 12;
};

inline NodePlan node_plan(long top, int J) {
    NodePlan p;
    p.K = 12;
    long L = static_cast<long>(p.K) * (J + 1) + 1;
    long step = std::max<long>(4, (top / 2 / L) / 4 * 4);
    std::vector<long> nodes;
    for (long i = 0; i < L; ++i) {
        long n = top - i * step;
        if (n >= 8) nodes.push_back(n);
    }
    while (static_cast<long>(nodes.size()) < L && p.K > 1) {
        --p.K;
        L = static_cast<long>(p.K) * (J + 1) + 1;
        if (static_cast<long>(nodes.size()) > L) nodes.resize(L);
    }
    if (static_cast<long>(nodes.size()) > L) nodes.resize(L);
    p.nodes = std::move(nodes);
    return p;
}

// Solve the exactly-determined fit S_N ~ S + sum_{k<=K, j<=J} c_kj x^k lg^j
// with x = N_ref/N, lg = log(N/N_ref), and return S.
template <class Value>
Value extrapolate(const std::map<long, Value>& rec, const NodePlan& plan, int J) {
    const int K = plan.K;
    const auto& nodes = plan.nodes;
    const int L = static_cast<int>(nodes.size());
    std::vector<std::vector<Real>> A(L);
    std::vector<Value> b;
    b.reserve(L);
    const Real Nref(static_cast<double>(nodes[0]));
    for (int row = 0; row < L; ++row) {
        const Real N(static_cast<double>(nodes[row]));
        const Real x = Nref / N;
        const Real lg = boost::multiprecision::log(N / Nref);
        auto& r = A[row];
        r.reserve(1 + static_cast<std::size_t>(K) * (J + 1));
        r.push_back(Real(1));
        Real xk(1);
        for (int k = 1; k <= K; ++k) {
            xk *= x;
            Real lj(1);
            for (int j = 0; j <= J; ++j) {
                r.push_back(xk * lj);
                lj *= lg;
            }
        }
        auto it = rec.find(nodes[row]);
        if (it == rec.end()) throw std::logic_error("extrapolate: missing node value");
        b.push_back(it->second);
    }
    // Gaussian elimination with partial pivoting; scalar matrix, Value rhs.
    for (int col = 0; col < L; ++col) {
        int piv = col;
        Real best = abs_of(A[col][col]);
        for (int row = col + 1; row < L; ++row) {
            Real cand = abs_of(A[row][col]);
            if (cand > best) {
                best = cand;
                piv = row;
            }
        }
        if (best == 0) throw std::runtime_error("extrapolate: singular system");
        if (piv != col) {
            std::swap(A[piv], A[col]);
            std::swap(b[piv], b[col]);
        }
        for (int row = col + 1; row < L; ++row) {
            if (A[row][col] == 0) continue;
            Real f = A[row][col] / A[col][col];
            for (int c2 = col; c2 < L; ++c2) A[row][c2] -= f * A[col][c2];
            b[row] -= b[col] * f;
        }
    }
    std::vector<Value> sol(L, Value{Real(0)});
    for (int row = L - 1; row >= 0; --row) {
        Value acc = b[row];
        for (int c2 = row + 1; c2 < L; ++c2) acc -= sol[c2] * A[row][c2];
        sol[row] = acc * (Real(1) / A[row][row]);
    }
    return sol[0];
}

// Adaptive driver: doubles the cutoff until two consecutive extrapolation
// levels agree to the target.  Precision must already be set by the caller.
template <class Value, class TermFn>
std::pair<Value, Real> eval_series(int r, int J, int digits, TermFn term, int max_level = 9) {
    const long N0 = 64;
    int lvl = digits <= 24 ? 5 : (digits <= 40 ? 6 : 7);
    if (lvl > max_level) lvl = max_level;
    const Real target = int_pow(Real(10), digits + 4);
    PrefixSweep<Value, TermFn> sweep(r, std::move(term));
    std::map<long, Value> rec;
    Value best{Real(0)};
    Real err(1);
    for (; lvl <= max_level; ++lvl) {
        NodePlan lo = node_plan(N0 << (lvl - 1), J);
        NodePlan hi = node_plan(N0 << lvl, J);
        std::set<long> want(lo.nodes.begin(), lo.nodes.end());
        want.insert(hi.nodes.begin(), hi.nodes.end());
        sweep.advance(N0 << lvl, want, rec);
        Value vlo = extrapolate(rec, lo, J);
        Value vhi = extrapolate(rec, hi, J);
        err = abs_of(vhi - vlo);
        best = vhi;
        if (err * target <= 1) break;
    }
    return {best, err};
}

}  // namespace detail

// --- AMMV evaluation ----------------------------------------------------------

// Working precision used internally for one index at the given target.  The
// extrapolation solve sheds roughly 1.7*L digits to ill-conditioning, so the
// precision has to grow with the node count L, not just the target.  Callers
// that evaluate from several threads at once must batch indices with equal
// working precision together: the precision default is process-wide.
inline unsigned eval_working_digits(const Index& i, int digits) {
    if (i.comps.empty() || (i.depth() == 1 && i.comps[0].s == 1))
        return static_cast<unsigned>(2 * digits + 30);
    int J = 1;
    for (std::size_t j = 1; j < i.comps.size(); ++j)
        if (i.comps[j].s == 1 && i.comps[j].sigma == +1) ++J;
    return static_cast<unsigned>(2 * digits + 25 + 2 * (12 * (J + 1) + 1));
}

inline EvalResult eval_index(const Index& i, int digits) {
    if (!i.admissible())
        throw std::domain_error("eval_index: divergent index " + i.str());
    if (i.comps.empty()) return {Real(1), Real(0)};
    if (i.depth() == 1 && i.comps[0].s == 1) {
        PrecisionGuard guard(eval_working_digits(i, digits));
        // M(b1) = -log2, M(cb1) = -pi/2.
        if (i.comps[0].eps == +1) return {-const_log2(), Real(0)};
        return {-const_pi() / 2, Real(0)};
    }
    const auto& comps = i.comps;
    int J = 1;
    for (std::size_t j = 1; j < comps.size(); ++j)
        if (comps[j].s == 1 && comps[j].sigma == +1) ++J;
    PrecisionGuard guard(eval_working_digits(i, digits));
    auto term = [&comps](long m, int j, Real& out) -> bool {
        const Component& c = comps[j];
        if ((m % 2 == 0) != (c.eps == +1)) return false;
        out = Real(2) / detail::int_pow(Real(static_cast<double>(m)), c.s);
        if (c.sigma == -1 && (((m + 1) / 2) % 2 == 1)) out = -out;
        return true;
    };
    auto [v, e] = detail::eval_series<Real>(static_cast<int>(comps.size()), J, digits, term);
    return {v, e};
}

// --- level-4 CMZV evaluation ----------------------------------------------------

inline EvalResultC eval_cmzv(const CmzvIndex& z, int digits) {
    if (!z.admissible())
        throw std::domain_error("eval_cmzv: divergent index " + z.str());
    if (z.k.empty()) return {Complex{Real(1)}, Real(0)};
    const auto& k = z.k;
    const auto& zp = z.zpow;
    int J = 1;
    for (std::size_t j = 1; j < k.size(); ++j)
        if (k[j] == 1 && zp[j] == 0) ++J;
    PrecisionGuard guard(2 * digits + 25 + 2 * (12 * (J + 1) + 1));
    auto term = [&k, &zp](long m, int j, Complex& out) -> bool {
        Real mag = Real(1) / detail::int_pow(Real(static_cast<double>(m)), k[j]);
        switch ((zp[j] * (m % 4)) % 4) {
            case 0: out = Complex{mag, Real(0)}; break;
            case 1: out = Complex{Real(0), mag}; break;
            case 2: out = Complex{-mag, Real(0)}; break;
            default: out = Complex{Real(0), -mag}; break;
        }
        return true;
    };
    auto [v, e] = detail::eval_series<Complex>(static_cast<int>(k.size()), J, digits, term);
    return {v, e};
}

inline EvalResult eval_word(const Word& w, int digits) {
    auto [sgn, idx] = q_map(w);
    EvalResult r = eval_index(idx, digits);
    if (sgn < 0) r.value = -r.value;
    return r;
}

inline EvalResult eval_lincomb(const LinComb<Index>& lc, int digits) {
    PrecisionGuard guard(2 * digits + 30);
    Real v(0), e(0);
    for (const auto& [idx, c] : lc) {
        EvalResult r = eval_index(idx, digits);
        Real rc = to_real(c);
        v += rc * r.value;
        e += boost::multiprecision::abs(rc) * r.err;
    }
    return {v, e};
}

// --- constants -----------------------------------------------------------------

inline Real eval_constant(const ConstSymbol& s, int digits) {
    PrecisionGuard guard(2 * digits + 30);
    switch (s.kind) {
        case CK::Pi: return const_pi();
        case CK::Log2: return const_log2();
        case CK::Zeta: return const_zeta(static_cast<unsigned>(s.n));
        case CK::Beta: return const_beta(static_cast<unsigned>(s.n));
        case CK::LiHalf: return li_half(static_cast<unsigned>(s.n));
        case CK::ImLiW: return im_li_w(static_cast<unsigned>(s.n));
        case CK::Zeta5b1: return eval_cmzv(CmzvIndex{{5, 1}, {2, 0}}, digits).value.re;
    }
    throw std::logic_error("eval_constant: unknown symbol");
}

inline Real eval_closed_form(const ClosedForm& cf, int digits) {
    PrecisionGuard guard(2 * digits + 30);
    Real s(0);
    for (const auto& [mono, c] : cf) {
        Real t = to_real(c);
        for (const auto& [sym, e] : mono.exps) {
            Real v = eval_constant(sym, digits);
            for (int q = 0; q < e; ++q) t *= v;
        }
        s += t;
    }
    return s;
}

// --- exact truncation oracle -----------------------------------------------------

// Partial sum over chains with outer summand <= N, as an exact rational.
inline Rat truncated_oracle(const Index& i, long N) {
    const int r = i.depth();
    std::vector<Rat> inner(r + 2, Rat(0));
    inner[r + 1] = Rat(1);
    for (long m = 1; m <= N; ++m) {
        for (int j = 1; j <= r; ++j) {
            const Component& c = i.comps[j - 1];
            if ((m % 2 == 0) != (c.eps == +1)) continue;
            Rat p(1);
            for (int t = 0; t < c.s; ++t) p *= m;
            Rat term = Rat(2) / p;
            if (c.sigma == -1 && (((m + 1) / 2) % 2 == 1)) term = -term;
            inner[j] += term * inner[j + 1];
        }
    }
    return r == 0 ? inner[r + 1] : inner[1];
}

// --- value cache ------------------------------------------------------------------

// Thread-safe map (symbol text, digits) -> (value, err) as decimal strings,
// persisted as tab-separated lines.
class ValueCache {
  public:
    std::optional<EvalResult> lookup(const std::string& key, int digits) const {
        std::shared_lock lk(mu_);
        auto it = map_.find({key, digits});
        if (it == map_.end()) return std::nullopt;
        // Only ever raise the working precision: lowering it here would race
        // with concurrent evaluations batched at a fixed higher precision.
        const unsigned needed = static_cast<unsigned>(2 * digits + 30);
        std::optional<PrecisionGuard> guard;
        if (Real::default_precision() < needed) guard.emplace(needed);
        return EvalResult{Real(it->second.first), Real(it->second.second)};
    }

    void store(const std::string& key, int digits, const Real& value, const Real& err) {
        std::unique_lock lk(mu_);
        map_[{key, digits}] = {value.str(digits + 12, std::ios_base::scientific),
                               err.str(6, std::ios_base::scientific)};
    }

    std::size_t size() const {
        std::shared_lock lk(mu_);
        return map_.size();
    }

    void load(const std::filesystem::path& p) {
        std::ifstream in(p);
        if (!in) return;
        std::unique_lock lk(mu_);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            std::string key, val, err;
            int digits = 0;
            if (std::getline(ss, key, '\t') && (ss >> digits) && ss.get() == '\t' &&
                std::getline(ss, val, '\t') && std::getline(ss, err))
                map_[{key, digits}] = {val, err};
        }
    }

    void save(const std::filesystem::path& p) const {
        std::shared_lock lk(mu_);
        std::ofstream out(p, std::ios::trunc);
        for (const auto& [k, v] : map_)
            out << k.first << '\t' << k.second << '\t' << v.first << '\t' << v.second << '\n';
    }

  private:
    mutable std::shared_mutex mu_;
    std::map<std::pair<std::string, int>, std::pair<std::string, std::string>> map_;
};

inline EvalResult eval_index_cached(const Index& i, int digits, ValueCache* cache) {
    if (cache) {
        if (auto hit = cache->lookup(i.str(), digits)) return *hit;
    }
    EvalResult r = eval_index(i, digits);
    if (cache) cache->store(i.str(), digits, r.value, r.err);
    return r;
}

inline EvalResult eval_lincomb_cached(const LinComb<Index>& lc, int digits, ValueCache* cache) {
    PrecisionGuard guard(2 * digits + 30);
    Real v(0), e(0);
    for (const auto& [idx, c] : lc) {
        EvalResult r = eval_index_cached(idx, digits, cache);
        Real rc = to_real(c);
        v += rc * r.value;
        e += boost::multiprecision::abs(rc) * r.err;
    }
    return {v, e};
}

// Evaluates every distinct index into the cache, possibly in parallel.  The
// precision default is process-wide, so parallel evaluation is only safe when
// every live guard requests the same precision: indices are grouped by their
// working precision and each group runs under a matching outer guard, making
// the inner per-index guards no-ops.  Results are identical for any job count.
inline void prewarm_indices(const std::vector<Index>& indices, int digits, int jobs,
                            ValueCache* cache) {
    if (!cache) return;
    std::set<Index> symbols(indices.begin(), indices.end());
    if (jobs <= 1 || symbols.size() < 2) {
        for (const Index& idx : symbols) eval_index_cached(idx, digits, cache);
        return;
    }
    std::map<unsigned, std::vector<Index>> groups;
    for (const Index& idx : symbols) groups[eval_working_digits(idx, digits)].push_back(idx);
    for (const auto& [wp, list] : groups) {
        PrecisionGuard outer(wp);
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= list.size()) return;
                eval_index_cached(list[k], digits, cache);
            }
        };
        std::vector<std::future<void>> pool;
        const int n = static_cast<int>(std::min<std::size_t>(jobs, list.size()));
        for (int t = 0; t < n - 1; ++t) pool.push_back(std::async(std::launch::async, worker));
        worker();
        for (auto& f : pool) f.get();
    }
}

}  // namespace ammv
