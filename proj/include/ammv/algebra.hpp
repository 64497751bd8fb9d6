#pragma once

#include "ammv/lincomb.hpp"
#include "ammv/word.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ammv {

// ---------------------------------------------------------------------------
// Shuffle product on words.
// ---------------------------------------------------------------------------

namespace detail {

inline void shuffle_rec(std::span<const Letter> u, std::span<const Letter> v,
                        std::vector<Letter>& acc, LinComb<Word>& out) {
    if (u.empty() && v.empty()) {
        out.add(Word{std::vector<Letter>(acc.begin(), acc.end())}, Rat(1));
        return;
    }
    if (!u.empty()) {
        acc.push_back(u.front());
        shuffle_rec(u.subspan(1), v, acc, out);
        acc.pop_back();
    }
    if (!v.empty()) {
        acc.push_back(v.front());
        shuffle_rec(u, v.subspan(1), acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

inline LinComb<Word> shuffle(const Word& u, const Word& v) {
    LinComb<Word> out;
    std::vector<Letter> acc;
    acc.reserve(u.letters.size() + v.letters.size());
    detail::shuffle_rec(u.letters, v.letters, acc, out);
    return out;
}

// ---------------------------------------------------------------------------
// Stuffle (quasi-shuffle) product on indices.  Besides the interleavings,
// leading components with equal parity eps merge into (s+t, sigma1*sigma2, eps)
// with an extra factor 2.
// ---------------------------------------------------------------------------

namespace detail {

inline void prepend_all(const Component& c, const LinComb<Index>& lc, LinComb<Index>& out,
                        const Rat& scale) {
    for (const auto& [idx, coeff] : lc.terms()) {
        Index t;
        t.comps.reserve(idx.comps.size() + 1);
        t.comps.push_back(c);
        t.comps.insert(t.comps.end(), idx.comps.begin(), idx.comps.end());
        out.add(t, coeff * scale);
    }
}

inline LinComb<Index> stuffle_rec(std::span<const Component> u, std::span<const Component> v) {
    LinComb<Index> out;
    if (u.empty() && v.empty()) {
        out.add(Index{}, Rat(1));
        return out;
    }
    if (u.empty() || v.empty()) {
        auto rest = u.empty() ? v : u;
        out.add(Index{std::vector<Component>(rest.begin(), rest.end())}, Rat(1));
        return out;
    }
    const Component& x = u.front();
    const Component& y = v.front();
    prepend_all(x, stuffle_rec(u.subspan(1), v), out, Rat(1));
    prepend_all(y, stuffle_rec(u, v.subspan(1)), out, Rat(1));
    if (x.eps == y.eps) {
        Component merged{x.s + y.s, x.sigma * y.sigma, x.eps};
        prepend_all(merged, stuffle_rec(u.subspan(1), v.subspan(1)), out, Rat(2));
    }
    return out;
}

}  // namespace detail

inline LinComb<Index> stuffle(const Index& i, const Index& j) {
    return detail::stuffle_rec(i.comps, j.comps);
}

inline LinComb<Index> stuffle(const LinComb<Index>& a, const LinComb<Index>& b) {
    return bilinear(a, b, [](const Index& i, const Index& j) { return stuffle(i, j); });
}

// Transport of a word combination through q: sum of sign * M(index).
inline LinComb<Index> q_map(const LinComb<Word>& words) {
    LinComb<Index> out;
    for (const auto& [w, c] : words.terms()) {
        auto [sign, idx] = q_map(w);
        out.add(idx, c * sign);
    }
    return out;
}

// The shuffle product of two indices transported back to index space:
// sign_u * sign_v * q(p(u) sha p(v)).
inline LinComb<Index> shuffle_on_indices(const Index& i, const Index& j) {
    if (i.comps.empty()) return LinComb<Index>::unit(j);
    if (j.comps.empty()) return LinComb<Index>::unit(i);
    auto [si, wi] = p_map(i);
    auto [sj, wj] = p_map(j);
    LinComb<Index> out = q_map(shuffle(wi, wj));
    out *= Rat(si * sj);
    return out;
}

// ---------------------------------------------------------------------------
// Duality: reverse the word, then substitute
//   w0 -> w_{+1}^{-1}           w_{+1}^{-1} -> w0     w_{-1}^{-1} -> w_{-1}^{-1}
//   w_{+1}^{+1} -> w0 + w_{+1}^{+1} - w_{+1}^{-1}
//   w_{-1}^{+1} -> w_{+1}^{+1} - w_{+1}^{-1} - w_{-1}^{+1}
// Valid for admissible words ending in w_{+-1}^{-1}.
// ---------------------------------------------------------------------------

inline LinComb<Word> dual_word(const Word& w) {
    if (!w.admissible() || w.empty())
        throw std::invalid_argument("dual_word: inadmissible word");
    const Letter& last = w.letters.back();
    if (last.is_omega0() || last.eps != -1)
        throw std::invalid_argument("dual_word: word must end in w_{+-1}^{-1}");

    auto substitute = [](const Letter& l) -> std::vector<std::pair<Letter, Rat>> {
        if (l.is_omega0()) return {{Letter::form(+1, -1), Rat(1)}};
        if (l.sigma == +1 && l.eps == -1) return {{Letter::omega0(), Rat(1)}};
        if (l.sigma == -1 && l.eps == -1) return {{Letter::form(-1, -1), Rat(1)}};
        if (l.sigma == +1 && l.eps == +1)
            return {{Letter::omega0(), Rat(1)},
                    {Letter::form(+1, +1), Rat(1)},
                    {Letter::form(+1, -1), Rat(-1)}};
        return {{Letter::form(+1, +1), Rat(1)},
                {Letter::form(+1, -1), Rat(-1)},
                {Letter::form(-1, +1), Rat(-1)}};
    };

    LinComb<Word> out = LinComb<Word>::unit(Word{});
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        LinComb<Word> next;
        for (const auto& [prefix, c] : out.terms())
            for (const auto& [l, cl] : substitute(*it)) {
                Word t = prefix;
                t.letters.push_back(l);
                next.add(t, c * cl);
            }
        out = next;
    }
    return out;
}

// Duality transported to index space: M(i) = sum of the returned combination.
inline LinComb<Index> dual_index(const Index& i) {
    auto [sign, w] = p_map(i);
    LinComb<Index> out = q_map(dual_word(w));
    out *= Rat(sign);
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition into colored multiple zeta values of level four.
// ---------------------------------------------------------------------------

// Li_{k}(z) with z components fourth roots of unity, stored as powers of i:
// z_j = i^{zpow_j}, zpow in {0,1,2,3}.
struct CmzvIndex {
    std::vector<int> k;
    std::vector<int> zpow;

    int weight() const {
        int w = 0;
        for (int v : k) w += v;
        return w;
    }
    int depth() const { return static_cast<int>(k.size()); }
    bool admissible() const {
        return k.empty() || !(k.front() == 1 && zpow.front() == 0);
    }

    friend bool operator==(const CmzvIndex&, const CmzvIndex&) = default;
    friend std::strong_ordering operator<=>(const CmzvIndex& a, const CmzvIndex& b) {
        if (auto c = a.k <=> b.k; c != 0) return c;
        return a.zpow <=> b.zpow;
    }

    std::string str() const {
        std::string out = "Li[";
        for (std::size_t j = 0; j < k.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(k[j]);
        }
        out += ';';
        static const char* names[4] = {"1", "I", "-1", "-I"};
        for (std::size_t j = 0; j < zpow.size(); ++j) {
            if (j) out += ',';
            out += names[((zpow[j] % 4) + 4) % 4];
        }
        out += ']';
        return out;
    }
};

// Expands each form letter into dt/(b - t) pieces (b = i^bpow) and converts
// pure f-words to Li indices via z_1 = 1/b_1, z_j = b_{j-1}/b_j:
//   w_{+1}^{-1} = f_1 - f_{-1}        w_{+1}^{+1} = f_1 + f_{-1}
//   w_{-1}^{-1} = -i f_i + i f_{-i}   w_{-1}^{+1} = f_i + f_{-i}
inline LinComb<CmzvIndex, GaussRat> word_to_cmzv(const Word& w) {
    if (!w.admissible()) throw std::invalid_argument("word_to_cmzv: inadmissible word");
    // Gather (s_j, letter_j).
    std::vector<int> s;
    std::vector<Letter> forms;
    int zeros = 0;
    for (const Letter& l : w.letters) {
        if (l.is_omega0()) {
            ++zeros;
        } else {
            s.push_back(zeros + 1);
            forms.push_back(l);
            zeros = 0;
        }
    }
    const int r = static_cast<int>(s.size());
    // Per-slot expansion: list of (bpow, coefficient).
    auto pieces = [](const Letter& l) -> std::vector<std::pair<int, GaussRat>> {
        const GaussRat one{Rat(1)};
        const GaussRat i_unit = GaussRat::unit_i();
        if (l.sigma == +1 && l.eps == -1) return {{0, one}, {2, -one}};
        if (l.sigma == +1 && l.eps == +1) return {{0, one}, {2, one}};
        if (l.sigma == -1 && l.eps == -1) return {{1, -i_unit}, {3, i_unit}};
        return {{1, one}, {3, one}};
    };

    LinComb<CmzvIndex, GaussRat> out;
    std::vector<int> bpow(r);
    GaussRat coeff;
    auto rec = [&](auto&& self, int j, GaussRat acc) -> void {
        if (j == r) {
            CmzvIndex c;
            c.k = s;
            c.zpow.resize(r);
            int prev = 0;  // b_0 = 1
            for (int t = 0; t < r; ++t) {
                c.zpow[t] = ((prev - bpow[t]) % 4 + 4) % 4;
                prev = bpow[t];
            }
            out.add(c, acc);
            return;
        }
        for (const auto& [bp, cf] : pieces(forms[j])) {
            bpow[j] = bp;
            self(self, j + 1, acc * cf);
        }
    };
    if (r > 0)
        rec(rec, 0, GaussRat{Rat(1)});
    else
        out.add(CmzvIndex{}, GaussRat{Rat(1)});
    return out;
}

}  // namespace ammv
