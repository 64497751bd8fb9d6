#include <catch2/catch_amalgamated.hpp>

#include "ammv/pslq.hpp"
#include "ammv/relations.hpp"

#include <filesystem>
#include <functional>

using namespace ammv;

namespace {

Relation make_rel(int weight, std::initializer_list<std::pair<const char*, long>> terms) {
    Relation r;
    r.weight = weight;
    for (const auto& [text, c] : terms) r.terms.add(parse_index(text), Rat(c));
    return r;
}

// Compositions of w with a sign per slot, first slot never (1,+1).
long count_family_indices(int w) {
    std::function<long(int, bool)> rec = [&](int rem, bool first) -> long {
        if (rem == 0) return 1;
        long total = 0;
        for (int k = 1; k <= rem; ++k)
            for (int sigma : {+1, -1}) {
                if (first && k == 1 && sigma == +1) continue;
                total += rec(rem - k, false);
            }
        return total;
    };
    return rec(w, true);
}

}  // namespace

TEST_CASE("relation store rejects inhomogeneous relations and deduplicates") {
    RelationStore store;
    Relation r = make_rel(3, {{"M(c2,b1)", 1}, {"M(cb2,cb1)", 1}, {"M(b2,c1)", -1}});
    CHECK(store.insert(r));
    CHECK_FALSE(store.insert(r));  // duplicate
    Relation scaled = r;
    scaled.terms *= Rat(-6);
    CHECK_FALSE(store.insert(scaled));  // same relation up to scale
    CHECK(store.size() == 1);
    CHECK(store.at(3).size() == 1);
    CHECK(store.at(2).empty());

    Relation bad = make_rel(3, {{"M(2)", 1}, {"M(3)", 1}});
    CHECK_THROWS_AS(store.insert(bad), std::logic_error);

    Relation trivial;
    trivial.weight = 2;
    CHECK_FALSE(store.insert(trivial));

    auto path = std::filesystem::temp_directory_path() / "ammv_store_test.tsv";
    store.save(path);
    RelationStore reloaded;
    reloaded.load(path);
    CHECK(reloaded.size() == store.size());
    CHECK_FALSE(reloaded.insert(r));  // still recognized after the round-trip
    std::filesystem::remove(path);
}

TEST_CASE("integer echelon ranks") {
    detail::IntEchelon full;
    CHECK(full.insert({Int(1), Int(0), Int(0)}));
    CHECK(full.insert({Int(0), Int(1), Int(0)}));
    CHECK(full.insert({Int(0), Int(0), Int(1)}));
    CHECK(full.rank() == 3);
    CHECK_FALSE(full.insert({Int(2), Int(3), Int(-5)}));

    detail::IntEchelon dep;
    CHECK(dep.insert({Int(2), Int(4)}));
    CHECK_FALSE(dep.insert({Int(-3), Int(-6)}));
    CHECK(dep.rank() == 1);
    CHECK(dep.insert({Int(1), Int(1)}));
    CHECK(dep.rank() == 2);
}

TEST_CASE("weight one has no relations") {
    RelationStore store;
    HarvestOptions opt;
    opt.digits = 20;
    HarvestReport rep = harvest(store, 1, opt);
    CHECK(rep.accepted == 0);
    CHECK(rep.rejected == 0);
    DimReport dims = rank_and_dims(1, store);
    CHECK(dims.symbols == 2);
    CHECK(dims.rank == 0);
    CHECK(dims.bound == 2);
    CHECK(dims.conjectured == 2);
    CHECK(dims.gap == 0);
}

TEST_CASE("weight two bound meets the conjecture") {
    RelationStore store;
    HarvestOptions opt;
    opt.digits = 20;
    opt.jobs = 2;
    HarvestReport rep = harvest(store, 2, opt);
    CHECK(rep.rejected == 0);
    CHECK(rep.accepted > 0);
    DimReport dims = rank_and_dims(2, store);
    CHECK(dims.bound == 4);
    CHECK(dims.gap == 0);
    for (int f = 0; f < 4; ++f) CHECK(dims.family_bound[f] >= dims.family_conjectured[f]);
}

TEST_CASE("harvest refuses large weights without an override") {
    RelationStore store;
    HarvestOptions opt;
    CHECK_THROWS_AS(harvest(store, 5, opt), std::invalid_argument);
}

TEST_CASE("integer relation detection") {
    const int digits = 30;
    PrecisionGuard guard(2 * digits + 30);
    Real x = const_log2();
    PslqResult r = pslq({x, 2 * x}, digits);
    REQUIRE(r.found);
    REQUIRE(r.coeffs.size() == 2);
    CHECK(boost::multiprecision::abs(r.coeffs[0]) == 2);
    CHECK(boost::multiprecision::abs(r.coeffs[1]) == 1);
    Real dot = to_real(Rat(r.coeffs[0])) * x + to_real(Rat(r.coeffs[1])) * (2 * x);
    CHECK(boost::multiprecision::abs(dot) < Real("1e-25"));

    // zeta(2) and pi^2 are commensurable with ratio 6.
    Real pi = const_pi();
    PslqResult z = pslq({const_zeta(2), pi * pi}, 25);
    REQUIRE(z.found);
    Int a = z.coeffs[0], b = z.coeffs[1];
    if (a < 0) {
        a = -a;
        b = -b;
    }
    CHECK(a == 6);
    CHECK(b == -1);

    // Independent inputs: no relation within the coefficient budget.
    PslqResult none = pslq({Real(1), pi}, 20, 12);
    CHECK_FALSE(none.found);
    CHECK_FALSE(none.diagnostic.empty());
}

TEST_CASE("tabulated bases are numerically independent") {
    CHECK(basis_elements(BasisId::MB, 2).size() == 4);
    BasisCheckReport m1 = basis_check(BasisId::MB, 1, 20);
    CHECK(m1.independent);
    BasisCheckReport t2 = basis_check(BasisId::tB, 2, 20);
    CHECK(t2.independent);
    CHECK_THROWS_AS(basis_elements(BasisId::MB, 4), std::invalid_argument);
}

TEST_CASE("family enumeration counts") {
    for (Family f : {Family::AMZV, Family::AMtV, Family::AMTV, Family::AMSV})
        for (int w = 1; w <= 4; ++w) {
            CAPTURE(static_cast<int>(f), w);
            CHECK(enumerate_family(f, w).size() == static_cast<std::size_t>(count_family_indices(w)));
        }
    CHECK(count_family_indices(2) == 4);
    CHECK(count_family_indices(3) == 12);
}

TEST_CASE("conjectured dimension tables") {
    CHECK(conjectured_dim_ammv(0) == 1);
    CHECK(conjectured_dim_ammv(5) == 32);
    CHECK(conjectured_dim(Family::AMZV, 6) == 13);
    CHECK(conjectured_dim(Family::AMtV, 5) == 24);
    CHECK(conjectured_dim(Family::AMTV, 7) == 44);
    CHECK(conjectured_dim(Family::AMSV, 6) == 42);
}
