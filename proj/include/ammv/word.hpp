#pragma once

#include "ammv/index.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ammv {

// One of the five integrand letters: w0 = dt/t, or w_sigma^eps with
//   w_{+1}^{-1} = 2dt/(1-t^2)    w_{+1}^{+1} = 2t dt/(1-t^2)
//   w_{-1}^{-1} = -2dt/(1+t^2)   w_{-1}^{+1} = -2t dt/(1+t^2).
// sigma == 0 encodes w0.
struct Letter {
    int sigma = 0;
    int eps = 0;

    static Letter omega0() { return Letter{0, 0}; }
    static Letter form(int sigma, int eps) { return Letter{sigma, eps}; }

    bool is_omega0() const { return sigma == 0; }
    // The two divergent letters are w_{+1}^{+-1}: nonintegrable at t = 1.
    bool divergent() const { return sigma == +1; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

    std::string str() const {
        if (is_omega0()) return "w0";
        std::string out = "w";
        out += (sigma > 0 ? "+1" : "-1");
        out += '^';
        out += (eps > 0 ? "+1" : "-1");
        return out;
    }
};

struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    int weight() const { return static_cast<int>(letters.size()); }
    int depth() const {
        int d = 0;
        for (const auto& l : letters)
            if (!l.is_omega0()) ++d;
        return d;
    }

    bool empty() const { return letters.empty(); }

    // Admissible: does not begin with a divergent letter and does not end
    // with w0.  (Empty word is admissible and integrates to 1.)
    bool admissible() const {
        if (letters.empty()) return true;
        return !letters.front().divergent() && !letters.back().is_omega0();
    }

    // In A^1: anything not ending in w0.
    bool in_a1() const { return letters.empty() || !letters.back().is_omega0(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
        for (std::size_t j = 0; j < a.letters.size(); ++j)
            if (auto c = a.letters[j] <=> b.letters[j]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    Word concat(const Word& o) const {
        Word w = *this;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }

    std::string str() const {
        if (letters.empty()) return "(empty)";
        std::string out;
        for (std::size_t j = 0; j < letters.size(); ++j) {
            if (j) out += ' ';
            out += letters[j].str();
        }
        return out;
    }
};

// Index -> word.  The letter of slot j carries the sign prefix
// sigma_1...sigma_j and parity eps_j * eps_{j+1} (eps_{r+1} := 1); a factor
// -1 is picked up at each junction where the sign prefix is -1, eps_j = +1
// and eps_{j+1} = -1.  Works for divergent indices as well.
inline std::pair<int, Word> p_map(const Index& i) {
    if (i.comps.empty()) throw std::invalid_argument("p_map: empty index");
    int sign = +1;
    Word w;
    int sigma_prefix = +1;
    const int r = i.depth();
    for (int j = 0; j < r; ++j) {
        const Component& c = i.comps[j];
        for (int t = 1; t < c.s; ++t) w.letters.push_back(Letter::omega0());
        sigma_prefix *= c.sigma;
        const int eps_next = (j + 1 < r) ? i.comps[j + 1].eps : +1;
        if (sigma_prefix == -1 && c.eps == +1 && eps_next == -1) sign = -sign;
        w.letters.push_back(Letter::form(sigma_prefix, c.eps * eps_next));
    }
    return {sign, w};
}

// Word -> index with the sign
//   sgn(sigma, eps) = (-1)^{#{i < r : sigma_i = eps_i = eps_{i+1}...eps_r = -1}}
// read off the word letters; the index has sigma'_j = sigma_j sigma_{j-1}
// and eps'_j = eps_j eps_{j+1} ... eps_r.
inline std::pair<int, Index> q_map(const Word& w) {
    if (!w.admissible()) throw std::invalid_argument("q_map: inadmissible word " + w.str());
    if (w.empty()) return {+1, Index{}};
    // Split into runs of w0 followed by a form letter.
    std::vector<int> s;
    std::vector<int> sigma, eps;
    int zeros = 0;
    for (const Letter& l : w.letters) {
        if (l.is_omega0()) {
            ++zeros;
        } else {
            s.push_back(zeros + 1);
            sigma.push_back(l.sigma);
            eps.push_back(l.eps);
            zeros = 0;
        }
    }
    const int r = static_cast<int>(s.size());
    // Suffix parity products eps_j ... eps_r.
    std::vector<int> suffix(r + 1, +1);
    for (int j = r - 1; j >= 0; --j) suffix[j] = eps[j] * suffix[j + 1];
    int sign = +1;
    for (int j = 0; j + 1 < r; ++j)
        if (sigma[j] == -1 && eps[j] == -1 && suffix[j + 1] == -1) sign = -sign;
    Index idx;
    idx.comps.reserve(r);
    int prev_sigma = +1;
    for (int j = 0; j < r; ++j) {
        idx.comps.push_back(Component{s[j], sigma[j] * prev_sigma, suffix[j]});
        prev_sigma = sigma[j];
    }
    return {sign, idx};
}

// Parses the space-separated word notation, e.g. "w0 w+1^-1 w-1^+1".
inline Word parse_word(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != 'w') detail::parse_fail(text, pos, "expected letter token");
        ++pos;
        if (pos < text.size() && text[pos] == '0') {
            ++pos;
            w.letters.push_back(Letter::omega0());
        } else {
            int sigma = 0, eps = 0;
            auto sign_at = [&](const char* what) {
                if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
                    detail::parse_fail(text, pos, what);
                int v = text[pos] == '+' ? +1 : -1;
                ++pos;
                if (pos >= text.size() || text[pos] != '1') detail::parse_fail(text, pos, "expected 1");
                ++pos;
                return v;
            };
            sigma = sign_at("expected sign");
            if (pos >= text.size() || text[pos] != '^') detail::parse_fail(text, pos, "expected '^'");
            ++pos;
            eps = sign_at("expected sign");
            w.letters.push_back(Letter::form(sigma, eps));
        }
        skip();
    }
    return w;
}

}  // namespace ammv
