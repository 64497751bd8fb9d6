#pragma once

#include "ammv/lincomb.hpp"
#include "ammv/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ammv {

// One slot of a decorated composition: exponent s >= 1, sign sigma and
// parity eps, both in {+1, -1}.  eps = +1 restricts the summation variable
// of that slot to even values, eps = -1 to odd values.
struct Component {
    int s = 1;
    int sigma = +1;
    int eps = +1;

    friend bool operator==(const Component&, const Component&) = default;
};

// M^eps_sigma(s): the central symbol.  The empty index denotes the value 1.
struct Index {
    std::vector<Component> comps;

    Index() = default;
    explicit Index(std::vector<Component> c) : comps(std::move(c)) {}

    int depth() const { return static_cast<int>(comps.size()); }
    int weight() const {
        int w = 0;
        for (const auto& c : comps) w += c.s;
        return w;
    }

    // A nonempty index is admissible iff its word does not begin with a
    // divergent letter, i.e. iff (s_1, sigma_1) != (1, +1).  This covers
    // the eps_1 = -1 edge case as well.
    bool admissible() const {
        if (comps.empty()) return true;
        return !(comps.front().s == 1 && comps.front().sigma == +1);
    }

    // A leading component (1, +1, *) makes the series divergent.
    bool divergent() const { return !admissible(); }

    friend bool operator==(const Index&, const Index&) = default;

    // Canonical total order: weight, depth, composition lexicographic,
    // sigma-vector lexicographic with +1 < -1, eps-vector likewise.
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        if (auto c = a.depth() <=> b.depth(); c != 0) return c;
        for (std::size_t j = 0; j < a.comps.size(); ++j)
            if (auto c = a.comps[j].s <=> b.comps[j].s; c != 0) return c;
        auto rank = [](int v) { return v == +1 ? 0 : 1; };
        for (std::size_t j = 0; j < a.comps.size(); ++j)
            if (auto c = rank(a.comps[j].sigma) <=> rank(b.comps[j].sigma); c != 0) return c;
        for (std::size_t j = 0; j < a.comps.size(); ++j)
            if (auto c = rank(a.comps[j].eps) <=> rank(b.comps[j].eps); c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::string str() const;
};

inline std::string format_component(const Component& c) {
    std::string out;
    if (c.eps == -1) out += 'c';
    if (c.sigma == -1) out += 'b';
    out += std::to_string(c.s);
    return out;
}

inline std::string Index::str() const {
    std::string out = "M(";
    for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j) out += ',';
        out += format_component(comps[j]);
    }
    out += ')';
    return out;
}

inline std::string format_index(const Index& i) { return i.str(); }

namespace detail {

inline void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

[[noreturn]] inline void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + " in \"" +
                                std::string(text) + "\": " + what);
}

// comp := ["c"]["b"] digits, with the c-before-b order fixed.
inline Component parse_component(std::string_view text, std::size_t& pos, bool allow_check) {
    Component c;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == 'c') {
        if (!allow_check) parse_fail(text, pos, "check decoration not allowed here");
        c.eps = -1;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'b') {
        c.sigma = -1;
        ++pos;
    }
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        parse_fail(text, pos, "expected digits");
    long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000000) parse_fail(text, pos, "exponent out of range");
        ++pos;
    }
    if (v == 0) parse_fail(text, pos, "zero part");
    c.s = static_cast<int>(v);
    skip_ws(text, pos);
    return c;
}

inline std::vector<Component> parse_comp_list(std::string_view text, std::size_t& pos, bool allow_check) {
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '(') parse_fail(text, pos, "expected '('");
    ++pos;
    std::vector<Component> comps;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ')') {
        ++pos;
        return comps;
    }
    while (true) {
        comps.push_back(parse_component(text, pos, allow_check));
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            return comps;
        }
        parse_fail(text, pos, "expected ',' or ')'");
    }
}

}  // namespace detail

// Parses the text notation "M(b2,3,cb4)"; c marks eps = -1, b marks
// sigma = -1.  Inadmissible indices parse fine; admissibility is the
// caller's concern.
inline Index parse_index(std::string_view text) {
    std::size_t pos = 0;
    detail::skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != 'M') detail::parse_fail(text, pos, "expected 'M'");
    ++pos;
    Index i{detail::parse_comp_list(text, pos, /*allow_check=*/true)};
    detail::skip_ws(text, pos);
    if (pos != text.size()) detail::parse_fail(text, pos, "trailing input");
    return i;
}

enum class Family { AMZV, AMtV, AMTV, AMSV };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::AMZV: return "AMZV";
        case Family::AMtV: return "AMtV";
        case Family::AMTV: return "AMTV";
        case Family::AMSV: return "AMSV";
    }
    return "?";
}

// Index of one of the four classical families; only (k_j, sigma_j) per slot.
struct FamilyIndex {
    Family family = Family::AMZV;
    std::vector<std::pair<int, int>> comps;  // (k, sigma)

    int depth() const { return static_cast<int>(comps.size()); }
    int weight() const {
        int w = 0;
        for (const auto& [k, s] : comps) w += k;
        return w;
    }
    bool admissible() const {
        return !comps.empty() && !(comps.front().first == 1 && comps.front().second == +1);
    }
};

// Rewrites a family value as coeff * M(index):
//   AMZV: all eps even, coeff 2^{w-r};  AMtV: all eps odd, coeff 2^{-r};
//   AMTV: eps_j = (-1)^{r+1-j};         AMSV: eps_j = (-1)^{r-j}; coeff 1.
inline std::pair<Rat, Index> specialize(const FamilyIndex& f) {
    if (!f.admissible()) throw std::invalid_argument("inadmissible family index");
    const int r = f.depth();
    Index idx;
    idx.comps.reserve(r);
    for (int j = 1; j <= r; ++j) {
        const auto& [k, sg] = f.comps[j - 1];
        int eps = +1;
        switch (f.family) {
            case Family::AMZV: eps = +1; break;
            case Family::AMtV: eps = -1; break;
            case Family::AMTV: eps = ((r + 1 - j) % 2 == 0) ? +1 : -1; break;
            case Family::AMSV: eps = ((r - j) % 2 == 0) ? +1 : -1; break;
        }
        idx.comps.push_back(Component{k, sg, eps});
    }
    Rat coeff{1};
    if (f.family == Family::AMZV) {
        Int p = 1;
        p <<= (f.weight() - r);
        coeff = Rat(p);
    } else if (f.family == Family::AMtV) {
        Int p = 1;
        p <<= r;
        coeff = Rat(1) / Rat(p);
    }
    return {coeff, idx};
}

// Parses "T(b2,1)", "S(...)", "t(...)", "z(...)" (AMZV), and "tt(...)" for
// the 2^r-scaled t-family; bars mark sigma = -1.  Returns the family value
// as coeff * M(index).
inline std::pair<Rat, Index> parse_family_value(std::string_view text) {
    std::size_t pos = 0;
    detail::skip_ws(text, pos);
    Family fam;
    bool ddot_t = false;
    if (text.compare(pos, 2, "tt") == 0) {
        fam = Family::AMtV;
        ddot_t = true;
        pos += 2;
    } else if (pos < text.size() && text[pos] == 'T') {
        fam = Family::AMTV;
        ++pos;
    } else if (pos < text.size() && text[pos] == 'S') {
        fam = Family::AMSV;
        ++pos;
    } else if (pos < text.size() && text[pos] == 't') {
        fam = Family::AMtV;
        ++pos;
    } else if (pos < text.size() && text[pos] == 'z') {
        fam = Family::AMZV;
        ++pos;
    } else {
        detail::parse_fail(text, pos, "expected family prefix T, S, t, tt or z");
    }
    auto comps = detail::parse_comp_list(text, pos, /*allow_check=*/false);
    detail::skip_ws(text, pos);
    if (pos != text.size()) detail::parse_fail(text, pos, "trailing input");
    FamilyIndex f;
    f.family = fam;
    for (const auto& c : comps) f.comps.emplace_back(c.s, c.sigma);
    auto [coeff, idx] = specialize(f);
    if (ddot_t) {
        Int p = 1;
        p <<= f.depth();
        coeff *= Rat(p);
    }
    return {coeff, idx};
}

// ---------------------------------------------------------------------------
// Finite T- and S-harmonic sums, exact rationals throughout.
//
// With m = len(k) and tail = (sigma_2..,k_2..):
//   T_n, m odd : 2 sum_{j=1}^{n}   sigma_1^j / (2j-1)^{k_1} * T_j(tail)
//   T_n, m even: 2 sum_{j=1}^{n-1} sigma_1^j / (2j)^{k_1}   * T_j(tail)
//   S_n, m odd : 2 sum_{j=1}^{n-1} sigma_1^j / (2j)^{k_1}   * S_j(tail)
//   S_n, m even: 2 sum_{j=1}^{n}   sigma_1^j / (2j-1)^{k_1} * S_j(tail)
// and T_n(empty) = S_n(empty) = 1.  The vanishing conventions for small n
// fall out of the empty ranges of these recursions.
// ---------------------------------------------------------------------------

enum class HarmonicFamily { T, S };

struct HarmonicSumSpec {
    HarmonicFamily family = HarmonicFamily::T;
    std::vector<int> sigma;
    std::vector<int> k;
    int n = 1;
};

namespace detail {

struct HarmonicKey {
    bool is_t;
    std::vector<int> sigma;
    std::vector<int> k;
    int n;
    friend auto operator<=>(const HarmonicKey&, const HarmonicKey&) = default;
};

inline Rat harmonic_rec(bool is_t, const std::vector<int>& sigma, const std::vector<int>& k,
                        int n, std::map<HarmonicKey, Rat>& memo) {
    const int m = static_cast<int>(k.size());
    if (m == 0) return Rat(1);
    HarmonicKey key{is_t, sigma, k, n};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Figure out which branch uses the odd base (2j-1) with full range j<=n.
    const bool odd_branch = is_t ? (m % 2 == 1) : (m % 2 == 0);
    const int jmax = odd_branch ? n : n - 1;
    std::vector<int> tail_sigma(sigma.begin() + 1, sigma.end());
    std::vector<int> tail_k(k.begin() + 1, k.end());
    Rat total{0};
    for (int j = 1; j <= jmax; ++j) {
        Int base = odd_branch ? Int(2 * j - 1) : Int(2 * j);
        Int denom = 1;
        for (int e = 0; e < k[0]; ++e) denom *= base;
        Rat term = Rat(sigma[0] < 0 && (j % 2 == 1) ? -1 : 1) / Rat(denom);
        term *= harmonic_rec(is_t, tail_sigma, tail_k, j, memo);
        total += term;
    }
    total *= 2;
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

inline Rat harmonic_sum(const HarmonicSumSpec& h) {
    if (h.sigma.size() != h.k.size()) throw std::invalid_argument("sigma/k length mismatch");
    static thread_local std::map<detail::HarmonicKey, Rat> memo;
    return detail::harmonic_rec(h.family == HarmonicFamily::T, h.sigma, h.k, h.n, memo);
}

inline Rat harmonic_T(const std::vector<int>& sigma, const std::vector<int>& k, int n) {
    return harmonic_sum({HarmonicFamily::T, sigma, k, n});
}

inline Rat harmonic_S(const std::vector<int>& sigma, const std::vector<int>& k, int n) {
    return harmonic_sum({HarmonicFamily::S, sigma, k, n});
}

// All admissible indices of the given weight, in canonical order.
inline std::vector<Index> enumerate_admissible(int weight) {
    std::vector<Index> out;
    if (weight == 0) {
        out.push_back(Index{});
        return out;
    }
    // Enumerate compositions of `weight`, then decorate.
    std::vector<int> comp;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            const int r = static_cast<int>(comp.size());
            std::vector<Component> cs(r);
            auto dec = [&](auto&& dself, int j) -> void {
                if (j == r) {
                    Index idx{cs};
                    if (idx.admissible()) out.push_back(idx);
                    return;
                }
                for (int sg : {+1, -1})
                    for (int ep : {+1, -1}) {
                        cs[j] = Component{comp[j], sg, ep};
                        dself(dself, j + 1);
                    }
            };
            dec(dec, 0);
            return;
        }
        for (int s = 1; s <= rem; ++s) {
            comp.push_back(s);
            self(self, rem - s);
            comp.pop_back();
        }
    };
    rec(rec, weight);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ammv
