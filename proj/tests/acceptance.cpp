// Acceptance runner: twelve pinned criteria, one verdict line each.
// Exit status is the number of failed criteria.

#include "ammv/algebra.hpp"
#include "ammv/checks.hpp"
#include "ammv/numerics.hpp"
#include "ammv/pslq.hpp"
#include "ammv/relations.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace ammv;
using checks::CheckResult;
using checks::SuiteOptions;

namespace {

int g_jobs = 1;

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

SuiteOptions opts() {
    SuiteOptions o;
    o.digits = 0;  // every check runs at its own pinned digit count
    o.jobs = g_jobs;
    return o;
}

Verdict from_results(const std::vector<CheckResult>& results, double budget_s,
                     std::size_t min_count = 1) {
    Verdict v;
    double total = 0.0;
    double worst = 0.0;
    std::size_t failed = 0;
    for (const CheckResult& r : results) {
        total += r.seconds;
        worst = std::max(worst, r.residual);
        if (!r.pass) ++failed;
    }
    std::ostringstream os;
    os << results.size() << " checks, worst residual " << std::scientific << worst << ", "
       << std::fixed << total << "s";
    if (failed) os << ", " << failed << " FAILED";
    if (total > budget_s) os << ", over the " << budget_s << "s budget";
    v.detail = os.str();
    v.pass = failed == 0 && results.size() >= min_count && total <= budget_s;
    return v;
}

std::vector<CheckResult> filter_prefix(const std::vector<CheckResult>& in,
                                       const std::vector<std::string>& prefixes) {
    std::vector<CheckResult> out;
    for (const CheckResult& r : in)
        for (const std::string& p : prefixes)
            if (r.id.rfind(p, 0) == 0) {
                out.push_back(r);
                break;
            }
    return out;
}

std::vector<Index> admissible_pool(int max_weight) {
    std::vector<Index> pool;
    for (int w = 1; w <= max_weight; ++w)
        for (const Index& i : enumerate_admissible(w)) pool.push_back(i);
    return pool;
}

// --- criterion 8: random products against both expansions -------------------

Verdict random_products() {
    const int digits = 20;
    const int pairs = 100;
    const Real tol("1e-10");

    std::vector<Index> pool = admissible_pool(3);
    std::mt19937 rng(20250814u);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

    struct Case {
        Index a, b;
        LinComb<Index> st, sh;
    };
    std::vector<Case> cases;
    std::vector<Index> to_warm;
    for (int n = 0; n < pairs; ++n) {
        Case c;
        c.a = pool[pick(rng)];
        c.b = pool[pick(rng)];
        c.st = stuffle(c.a, c.b);
        c.sh = shuffle_on_indices(c.a, c.b);
        to_warm.push_back(c.a);
        to_warm.push_back(c.b);
        for (const auto& [k, _] : c.st) to_warm.push_back(k);
        for (const auto& [k, _] : c.sh) to_warm.push_back(k);
        cases.push_back(std::move(c));
    }

    ValueCache cache;
    prewarm_indices(to_warm, digits, g_jobs, &cache);

    int bad = 0;
    Real worst(0);
    {
        PrecisionGuard guard(2 * digits + 30);
        for (const Case& c : cases) {
            Real va = eval_index_cached(c.a, digits, &cache).value;
            Real vb = eval_index_cached(c.b, digits, &cache).value;
            Real prod = va * vb;
            Real rst = boost::multiprecision::abs(prod - eval_lincomb_cached(c.st, digits, &cache).value);
            Real rsh = boost::multiprecision::abs(prod - eval_lincomb_cached(c.sh, digits, &cache).value);
            const Real& r = rst > rsh ? rst : rsh;
            if (r > worst) worst = r;
            if (rst > tol || rsh > tol) ++bad;
        }
    }
    Verdict v;
    v.pass = bad == 0;
    std::ostringstream os;
    os << pairs << " pairs (weight <= 3) vs stuffle and shuffle expansions, worst residual "
       << std::scientific << worst.convert_to<double>();
    if (bad) os << ", " << bad << " FAILED";
    v.detail = os.str();
    return v;
}

// --- criterion 9: exhaustive word round-trip and shuffle counts -------------

Verdict roundtrip_and_counts() {
    long checked = 0;
    bool ok = true;

    std::function<void(int, Index&)> rec = [&](int rem, Index& cur) {
        if (!ok) return;
        if (rem == 0) {
            if (!cur.admissible()) return;  // divergent words sit outside q's domain
            auto [sign, w] = p_map(cur);
            auto [qsign, qidx] = q_map(w);
            if (qsign != sign || !(qidx == cur)) ok = false;
            ++checked;
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
    for (int w = 1; w <= 5; ++w) rec(w, cur);

    // Shuffle coefficient mass equals the interleaving count.
    auto binom = [](int n, int k) {
        Rat r(1);
        for (int i = 1; i <= k; ++i) r *= Rat(n - k + i) / Rat(i);
        return r;
    };
    std::vector<Word> ws = {parse_word("w+1^-1"), parse_word("w0 w-1^+1"),
                            parse_word("w0 w0 w+1^+1"), parse_word("w-1^-1 w-1^-1"),
                            parse_word("w0 w+1^-1 w-1^+1")};
    for (const Word& u : ws)
        for (const Word& v : ws) {
            Rat mass(0);
            for (const auto& [t, c] : shuffle(u, v)) mass += c;
            if (mass != binom(u.weight() + v.weight(), u.weight())) ok = false;
            ++checked;
        }

    Verdict v;
    v.pass = ok;
    std::ostringstream os;
    os << checked << " exact identities" << (ok ? "" : ", FAILED");
    v.detail = os.str();
    return v;
}

// --- criterion 10: harvested relations and dimension bounds -----------------

Verdict harvest_dims() {
    const double residual_budget = 1e-17;  // 10^-(25-8)
    RelationStore store;
    HarvestOptions opt;
    opt.digits = 25;
    opt.jobs = g_jobs;

    Verdict v;
    v.pass = true;
    std::ostringstream os;

    HarvestReport w1 = harvest(store, 1, opt);
    DimReport d1 = rank_and_dims(1, store);
    if (w1.rejected != 0 || d1.bound != 2) v.pass = false;
    os << "w1 bound " << d1.bound;

    for (int w = 2; w <= 4; ++w) {
        HarvestReport rep = harvest(store, w, opt);
        if (rep.rejected != 0) v.pass = false;
        for (const Relation& r : store.at(w))
            if (r.residual < 0 || r.residual > residual_budget) v.pass = false;
        DimReport d = rank_and_dims(w, store);
        if (d.bound < d.conjectured) v.pass = false;
        os << "; w" << w << " " << rep.accepted << " relations, bound " << d.bound
           << " vs conjectured " << d.conjectured << " (gap " << d.gap << ")";
    }
    if (!v.pass) os << ", FAILED";
    v.detail = os.str();
    return v;
}

// --- criterion 11: integer relation detection --------------------------------

Verdict pslq_recovery() {
    const int digits = 25;
    Verdict v;
    v.pass = true;

    std::vector<Real> triple;
    {
        ValueCache cache;
        std::vector<Index> anchor = {parse_index("M(c2,b1)"), parse_index("M(cb2,cb1)"),
                                     parse_index("M(b2,c1)")};
        prewarm_indices(anchor, digits, g_jobs, &cache);
        PrecisionGuard guard(2 * digits + 30);
        for (const Index& i : anchor) triple.push_back(eval_index_cached(i, digits, &cache).value);
    }
    PslqResult a = pslq(triple, digits);
    bool a_ok = a.found && a.coeffs.size() == 3;
    if (a_ok) {
        Int c0 = a.coeffs[0], c1 = a.coeffs[1], c2 = a.coeffs[2];
        if (c0 < 0) {
            c0 = -c0;
            c1 = -c1;
            c2 = -c2;
        }
        a_ok = c0 == 1 && c1 == 1 && c2 == -1;
    }
    if (!a_ok) v.pass = false;

    PslqResult z = [&] {
        PrecisionGuard guard(2 * digits + 30);
        Real pi = const_pi();
        return pslq({const_zeta(2), pi * pi}, digits);
    }();
    bool z_ok = z.found && z.coeffs.size() == 2;
    if (z_ok) {
        Int c0 = z.coeffs[0], c1 = z.coeffs[1];
        if (c0 < 0) {
            c0 = -c0;
            c1 = -c1;
        }
        z_ok = c0 == 6 && c1 == -1;
    }
    if (!z_ok) v.pass = false;

    v.detail = "anchor triple -> " + a.str() + "; zeta(2)/pi^2 -> " + z.str();
    if (!v.pass) v.detail += ", FAILED";
    return v;
}

// --- criterion 12: word evaluation equals its level-four decomposition ------

Verdict word_decomposition() {
    const int digits = 25;
    const Real tol("1e-15");

    std::vector<Index> pool = admissible_pool(4);
    std::mt19937 rng(477201u);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

    int bad = 0;
    Real worst(0);
    for (int n = 0; n < 20; ++n) {
        const Index& i = pool[pick(rng)];
        auto [sign, w] = p_map(i);
        EvalResult direct = eval_word(w, digits);
        PrecisionGuard guard(2 * digits + 30);
        Complex total;
        for (const auto& [z, c] : word_to_cmzv(w)) {
            EvalResultC zv = eval_cmzv(z, digits);
            total += Complex{to_real(c.re), to_real(c.im)} * zv.value;
        }
        Real resid = boost::multiprecision::abs(total.re - direct.value) +
                     boost::multiprecision::abs(total.im);
        if (resid > worst) worst = resid;
        if (resid > tol) ++bad;
    }
    Verdict v;
    v.pass = bad == 0;
    std::ostringstream os;
    os << "20 words (weight <= 4), worst residual " << std::scientific
       << worst.convert_to<double>();
    if (bad) os << ", " << bad << " FAILED";
    v.detail = os.str();
    return v;
}

}  // namespace

int main() {
    unsigned hw = std::thread::hardware_concurrency();
    g_jobs = static_cast<int>(std::min(hw == 0 ? 1u : hw, 4u));

    struct Criterion {
        int num;
        const char* label;
        std::function<Verdict()> run;
        double budget_s;
    };

    std::vector<Criterion> criteria = {
        {1, "regularized double-shuffle anchor",
         [] { return from_results(checks::run_regularization(opts()), 30.0, 3); }, 30.0},
        {2, "product expansions",
         [] { return from_results(checks::run_products(opts()), 1.0, 4); }, 1.0},
        {3, "duality examples",
         [] { return from_results(checks::run_duality(opts()), 120.0, 8); }, 120.0},
        {4, "arctangent integrals",
         [] {
             auto all = checks::run_arctan(opts());
             auto wanted = filter_prefix(
                 all, {"arctan-A", "arctan-ox", "arctan-S-2-b1", "arctan-T-2-1-b1",
                       "arctan-S-2-1-1-b1", "arctan-T-2-1-1-1-b1"});
             return from_results(wanted, 600.0, 12);
         },
         600.0},
        {5, "power-of-x reductions",
         [] {
             auto wanted = filter_prefix(checks::run_arctan(opts()), {"arctan-xn-"});
             return from_results(wanted, 300.0, 4);
         },
         300.0},
        {6, "value catalogue",
         [] { return from_results(checks::run_values(opts()), 600.0, 10); }, 600.0},
        {7, "parity identities",
         [] { return from_results(checks::run_parity(opts()), 600.0, 3); }, 600.0},
        {8, "random products", random_products, 900.0},
        {9, "word round-trip and shuffle counts", roundtrip_and_counts, 60.0},
        {10, "relation harvest and dimension bounds", harvest_dims, 1800.0},
        {11, "integer relation recovery", pslq_recovery, 60.0},
        {12, "level-four decomposition", word_decomposition, 300.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Timer t;
        Verdict v = c.run();
        double secs = t.seconds();
        if (secs > c.budget_s) v.pass = false;
        if (!v.pass) ++failures;
        std::printf("criterion %2d  %-4s  %6.1fs  %s -- %s\n", c.num, v.pass ? "PASS" : "FAIL",
                    secs, c.label, v.detail.c_str());
        std::fflush(stdout);
    }
    if (failures)
        std::printf("%d criterion(s) FAILED\n", failures);
    else
        std::printf("all 12 criteria PASS\n");
    return failures;
}
