#include <catch2/catch_amalgamated.hpp>

#include "ammv/word.hpp"

#include <functional>
#include <vector>

using namespace ammv;

namespace {

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

// Every word of the given length whose last letter is not omega0 (the image
// of the index-to-word map).
std::vector<Word> index_words(int len) {
    std::vector<Word> out;
    std::vector<Letter> alphabet = {Letter::omega0(), Letter::form(+1, +1), Letter::form(+1, -1),
                                    Letter::form(-1, +1), Letter::form(-1, -1)};
    std::function<void(Word&)> rec = [&](Word& cur) {
        if (cur.weight() == len) {
            if (!cur.letters.back().is_omega0()) out.push_back(cur);
            return;
        }
        for (const Letter& l : alphabet) {
            cur.letters.push_back(l);
            rec(cur);
            cur.letters.pop_back();
        }
    };
    Word cur;
    if (len > 0) rec(cur);
    return out;
}

}  // namespace

TEST_CASE("index-to-word map on pinned examples") {
    {
        auto [sign, w] = p_map(parse_index("M(c3,b2)"));
        CHECK(sign == +1);
        CHECK(w == parse_word("w0 w0 w+1^-1 w0 w-1^+1"));
    }
    {
        auto [sign, w] = p_map(parse_index("M(b2,3,cb4)"));
        CHECK(sign == -1);
        CHECK(w == parse_word("w0 w-1^+1 w0 w0 w-1^-1 w0 w0 w0 w+1^-1"));
    }
    {
        // Depth one: no junctions, sign is always +1.
        auto [sign, w] = p_map(parse_index("M(cb1)"));
        CHECK(sign == +1);
        CHECK(w == parse_word("w-1^-1"));
    }
}

TEST_CASE("word-to-index map inverts the index-to-word map") {
    for (int w = 1; w <= 5; ++w)
        for (const Index& i : all_indices(w)) {
            if (!i.admissible()) continue;
            auto [sign, word] = p_map(i);
            CHECK((sign == +1 || sign == -1));
            auto [qsign, qidx] = q_map(word);
            CAPTURE(i.str(), word.str());
            CHECK(qsign == sign);
            CHECK(qidx == i);
        }
}

TEST_CASE("index-to-word map inverts the word-to-index map") {
    for (int len = 1; len <= 5; ++len)
        for (const Word& w : index_words(len)) {
            if (!w.admissible()) continue;
            auto [sign, idx] = q_map(w);
            auto [psign, pword] = p_map(idx);
            CAPTURE(w.str(), idx.str());
            CHECK(psign == sign);
            CHECK(pword == w);
        }
}

TEST_CASE("word admissibility transports through the maps") {
    int inadmissible_seen = 0;
    for (int len = 1; len <= 4; ++len)
        for (const Word& w : index_words(len)) {
            if (w.admissible()) {
                CHECK(q_map(w).second.admissible());
            } else {
                // Divergent words are outside the map's domain, not values.
                CHECK_THROWS_AS(q_map(w), std::invalid_argument);
                ++inadmissible_seen;
            }
        }
    CHECK(inadmissible_seen > 0);
    // Divergent indices still have words, on the other side of the map.
    auto [sign, w] = p_map(parse_index("M(1,b2)"));
    CHECK(w.str() == "w+1^+1 w0 w-1^+1");
    CHECK_FALSE(w.admissible());
}

TEST_CASE("word text round-trip") {
    for (int len = 1; len <= 4; ++len)
        for (const Word& w : index_words(len)) {
            CAPTURE(w.str());
            CHECK(parse_word(w.str()) == w);
        }
    CHECK(parse_word("w0 w0 w+1^-1") == Word{{Letter::omega0(), Letter::omega0(), Letter::form(+1, -1)}});
    CHECK_THROWS_AS(parse_word("w2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("w+1"), std::invalid_argument);
}

TEST_CASE("weights and depths transport") {
    for (int w = 1; w <= 4; ++w)
        for (const Index& i : all_indices(w)) {
            auto [sign, word] = p_map(i);
            CHECK(word.weight() == i.weight());
            CHECK(word.depth() == i.depth());
        }
}
