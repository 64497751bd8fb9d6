#pragma once

#include "ammv/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace ammv {

// Finite formal linear combination over an ordered basis B with exact
// coefficients C.  Zero coefficients are never stored.
template <class B, class C = Rat>
class LinComb {
  public:
    using terms_type = std::map<B, C>;

    LinComb() = default;

    static LinComb unit(B b, C c = C(1)) {
        LinComb lc;
        lc.add(std::move(b), std::move(c));
        return lc;
    }

    void add(const B& b, const C& c) {
        if (c == C(0)) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, C(0) - c);
        return *this;
    }
    LinComb& operator*=(const C& k) {
        if (k == C(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= k;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const C& k, LinComb a) { return a *= k; }
    friend LinComb operator*(LinComb a, const C& k) { return a *= k; }
    LinComb operator-() const {
        LinComb r;
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, C(0) - c);
        return r;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) = default;

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const terms_type& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    C coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? C(0) : it->second;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(";
            if constexpr (requires { c.str(); })
                os << c.str();
            else
                os << c;
            os << ")*" << b.str();
        }
        return os.str();
    }

  private:
    terms_type terms_;
};

// Applies a basis map f : B1 -> LinComb<B2, C> linearly.
template <class B2, class B1, class C, class F>
LinComb<B2, C> map_basis(const LinComb<B1, C>& lc, F&& f) {
    LinComb<B2, C> out;
    for (const auto& [b, c] : lc.terms()) {
        LinComb<B2, C> img = f(b);
        img *= c;
        out += img;
    }
    return out;
}

// Applies a bilinear product f : (B, B) -> LinComb<B, C> pairwise.
template <class B, class C, class F>
LinComb<B, C> bilinear(const LinComb<B, C>& u, const LinComb<B, C>& v, F&& f) {
    LinComb<B, C> out;
    for (const auto& [bu, cu] : u.terms())
        for (const auto& [bv, cv] : v.terms()) {
            LinComb<B, C> img = f(bu, bv);
            img *= cu * cv;
            out += img;
        }
    return out;
}

}  // namespace ammv
