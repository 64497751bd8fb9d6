#include <catch2/catch_amalgamated.hpp>

#include "ammv/index.hpp"

#include <functional>
#include <vector>

using namespace ammv;

namespace {

// Every decorated index of the given weight, divergent ones included.
std::vector<Index> all_indices(int weight) {
    std::vector<Index> out;
    std::function<void(int, Index&)> rec = [&](int rem, Index& cur) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int s = 1; s <= rem; ++s)
            for (int sigma : {+1, -1})
                for (int eps : {+1, -1}) {
                    cur.comps.push_back({s, sigma, eps});
                    rec(rem - s, cur);
                    cur.comps.pop_back();
                }
    };
    Index cur;
    rec(weight, cur);
    return out;
}

// Brute-force T/S harmonic sums straight from the chain-set definitions:
// comparators alternate between > and >= depending on the parity of the
// depth, and the denominators alternate between odd and even bases.
Rat brute_harmonic(bool is_t, const std::vector<int>& sigma, const std::vector<int>& k, int n) {
    const int m = static_cast<int>(k.size());
    if (m == 0) return Rat(1);
    auto strict_before = [&](int j) {
        bool aligned = (j % 2) == (m % 2);
        return is_t ? !aligned : aligned;
    };
    auto base = [&](int p, int v) {
        bool odd_base = ((p % 2) == (m % 2)) == is_t;
        return odd_base ? 2 * v - 1 : 2 * v;
    };
    Rat total(0);
    std::vector<int> tup(static_cast<std::size_t>(m));
    std::function<void(int, int)> rec = [&](int pos, int prev) {
        if (pos > m) {
            Rat term(1 << m);
            for (int p = 1; p <= m; ++p) {
                int v = tup[static_cast<std::size_t>(p - 1)];
                if (sigma[static_cast<std::size_t>(p - 1)] < 0 && v % 2 == 1) term = -term;
                Int denom = 1;
                for (int e = 0; e < k[static_cast<std::size_t>(p - 1)]; ++e)
                    denom *= base(p, v);
                term /= Rat(denom);
            }
            total += term;
            return;
        }
        int hi = strict_before(pos) ? prev - 1 : prev;
        for (int v = 1; v <= hi; ++v) {
            tup[static_cast<std::size_t>(pos - 1)] = v;
            rec(pos + 1, v);
        }
    };
    rec(1, n);
    return total;
}

}  // namespace

TEST_CASE("empty index is the unit") {
    Index e;
    CHECK(e.weight() == 0);
    CHECK(e.depth() == 0);
    CHECK(e.admissible());
    CHECK(e.str() == "M()");
    CHECK(parse_index("M()") == e);
}

TEST_CASE("parse and format round-trip") {
    for (int w = 1; w <= 4; ++w)
        for (const Index& i : all_indices(w)) {
            CAPTURE(i.str());
            CHECK(parse_index(i.str()) == i);
        }
    // Whitespace tolerance.
    CHECK(parse_index(" M( cb2 , 1 , b3 ) ") == parse_index("M(cb2,1,b3)"));
}

TEST_CASE("admissibility depends only on the leading component") {
    CHECK(parse_index("M(2)").admissible());
    CHECK(parse_index("M(b1)").admissible());
    CHECK(parse_index("M(cb1)").admissible());
    CHECK(parse_index("M(c2)").admissible());
    CHECK_FALSE(parse_index("M(1)").admissible());
    CHECK_FALSE(parse_index("M(c1)").admissible());
    CHECK_FALSE(parse_index("M(1,2)").admissible());
    CHECK_FALSE(parse_index("M(c1,b1)").admissible());
    CHECK(parse_index("M(b1,1)").admissible());
}

TEST_CASE("parse errors carry a position") {
    for (const char* bad : {"M(2", "M)", "Q(2)", "M(0)", "M(2,)", "M(bb2)", "M(2)x"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_index(bad), std::invalid_argument);
        try {
            parse_index(bad);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    }
}

TEST_CASE("family specialization coefficients") {
    auto [cz, iz] = parse_family_value("z(2)");
    CHECK(cz == Rat(2));
    CHECK(iz == parse_index("M(2)"));

    auto [cz2, iz2] = parse_family_value("z(b3)");
    CHECK(cz2 == Rat(4));
    CHECK(iz2 == parse_index("M(b3)"));

    auto [ct, it] = parse_family_value("t(b1)");
    CHECK(ct == Rat(1, 2));
    CHECK(it == parse_index("M(cb1)"));

    auto [ct2, it2] = parse_family_value("t(b2,1)");
    CHECK(ct2 == Rat(1, 4));
    CHECK(it2 == parse_index("M(cb2,c1)"));

    auto [cT, iT] = parse_family_value("T(b2,1)");
    CHECK(cT == Rat(1));
    CHECK(iT == parse_index("M(b2,c1)"));

    auto [cS, iS] = parse_family_value("S(b2,1)");
    CHECK(cS == Rat(1));
    CHECK(iS == parse_index("M(cb2,1)"));

    auto [ctt, itt] = parse_family_value("tt(b2,b1)");
    CHECK(ctt == Rat(1));
    CHECK(itt == parse_index("M(cb2,cb1)"));

    // Text form agrees with the structural specialization.
    FamilyIndex f{Family::AMTV, {{2, -1}, {1, +1}}};
    auto [cf, idx] = specialize(f);
    CHECK(cf == cT);
    CHECK(idx == iT);
}

TEST_CASE("harmonic sums match the set-definition oracle") {
    // All sign patterns through depth 3, several exponents and cutoffs.
    std::vector<std::vector<int>> kk = {{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 1, 1}};
    for (const auto& k : kk) {
        const int m = static_cast<int>(k.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> sigma(static_cast<std::size_t>(m));
            for (int b = 0; b < m; ++b) sigma[static_cast<std::size_t>(b)] = (mask >> b) & 1 ? -1 : +1;
            for (int n = 1; n <= 6; ++n) {
                CAPTURE(k, sigma, n);
                CHECK(harmonic_T(sigma, k, n) == brute_harmonic(true, sigma, k, n));
                CHECK(harmonic_S(sigma, k, n) == brute_harmonic(false, sigma, k, n));
            }
        }
    }
}

TEST_CASE("harmonic sums vanish below their support") {
    // Depth 3 needs n >= 2 for T and n >= 3 for S; depth 2 needs n >= 2.
    CHECK(harmonic_T({1, 1, 1}, {1, 1, 1}, 1) == Rat(0));
    CHECK(harmonic_S({1, 1, 1}, {1, 1, 1}, 2) == Rat(0));
    CHECK(harmonic_T({1, 1}, {1, 1}, 1) == Rat(0));
    CHECK(harmonic_S({1, 1}, {1, 1}, 1) == Rat(0));
    CHECK(harmonic_T({1}, {3}, 0) == Rat(0));
}

TEST_CASE("enumerations agree with direct counting") {
    for (int w = 1; w <= 4; ++w) {
        std::size_t adm = 0;
        for (const Index& i : all_indices(w))
            if (i.admissible()) ++adm;
        CHECK(enumerate_admissible(w).size() == adm);
    }
}
