#pragma once

#include "ammv/numerics.hpp"
#include "ammv/pslq.hpp"
#include "ammv/regularization.hpp"

#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ammv {

// --- relation store -----------------------------------------------------------

// Weight-partitioned, append-only collection of normalized relations.  Every
// insert re-normalizes, checks homogeneity, and drops exact duplicates.
class RelationStore {
  public:
    bool insert(Relation r) {
        r.normalize();
        if (r.trivial()) return false;
        for (const auto& [idx, c] : r.terms)
            if (idx.weight() != r.weight)
                throw std::logic_error("RelationStore: term " + idx.str() +
                                       " breaks weight-" + std::to_string(r.weight) +
                                       " homogeneity (" + r.provenance + ")");
        if (!seen_.insert(key_of(r)).second) return false;
        by_weight_[r.weight].push_back(std::move(r));
        return true;
    }

    bool contains(int weight, LinComb<Index> terms) const {
        Relation probe{weight, std::move(terms), ""};
        probe.normalize();
        return seen_.count(key_of(probe)) > 0;
    }

    const std::vector<Relation>& at(int weight) const {
        static const std::vector<Relation> none;
        auto it = by_weight_.find(weight);
        return it == by_weight_.end() ? none : it->second;
    }

    std::vector<int> weights() const {
        std::vector<int> out;
        for (const auto& [w, v] : by_weight_)
            if (!v.empty()) out.push_back(w);
        return out;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& [w, v] : by_weight_) n += v.size();
        return n;
    }

    // One TSV line per relation: weight, residual, digits, provenance, terms.
    void save(const std::filesystem::path& p) const {
        std::ofstream out(p, std::ios::trunc);
        for (const auto& [w, v] : by_weight_)
            for (const Relation& r : v)
                out << r.weight << '\t' << r.residual << '\t' << r.digits << '\t'
                    << r.provenance << '\t' << serialize_terms(r.terms) << '\n';
    }

    void load(const std::filesystem::path& p) {
        std::ifstream in(p);
        if (!in) return;
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            Relation r;
            std::string terms;
            if (!(ss >> r.weight >> r.residual >> r.digits)) continue;
            ss.get();
            if (!std::getline(ss, r.provenance, '\t')) continue;
            if (!std::getline(ss, terms)) continue;
            r.terms = parse_terms(terms);
            insert(std::move(r));
        }
    }

    static std::string serialize_terms(const LinComb<Index>& lc) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [idx, c] : lc) {
            if (!first) os << ';';
            first = false;
            os << c << '*' << idx.str();
        }
        return os.str();
    }

    static LinComb<Index> parse_terms(const std::string& text) {
        LinComb<Index> lc;
        std::istringstream ss(text);
        std::string piece;
        while (std::getline(ss, piece, ';')) {
            auto star = piece.find('*');
            if (star == std::string::npos)
                throw std::invalid_argument("RelationStore: bad term " + piece);
            Rat c;
            std::istringstream(piece.substr(0, star)) >> c;
            lc.add(parse_index(piece.substr(star + 1)), c);
        }
        return lc;
    }

  private:
    static std::string key_of(const Relation& r) {
        return std::to_string(r.weight) + "|" + serialize_terms(r.terms);
    }

    std::map<int, std::vector<Relation>> by_weight_;
    std::set<std::string> seen_;
};

// --- harvesting ----------------------------------------------------------------

struct HarvestOptions {
    bool finite_dbsf = true;
    bool reg_dbsf = true;
    bool duality = true;
    int digits = 25;   // numeric validation precision
    int jobs = 1;      // parallel pre-evaluation of candidate symbols
    bool allow_large = false;  // weights above 4 grow quickly; opt in explicitly
};

struct HarvestReport {
    int weight = 0;
    int candidates = 0;
    int accepted = 0;
    int duplicates = 0;
    int rejected = 0;
    std::vector<std::string> rejects;

    std::string str() const {
        std::ostringstream os;
        os << "harvest w=" << weight << ": candidates=" << candidates
           << " accepted=" << accepted << " duplicates=" << duplicates
           << " rejected=" << rejected;
        return os.str();
    }
};

namespace detail {

template <typename Keep>
std::vector<Index> enumerate_indices_if(int weight, Keep&& keep) {
    std::vector<Index> out;
    if (weight == 0) {
        Index empty;
        if (keep(empty)) out.push_back(empty);
        return out;
    }
    std::vector<int> comp;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            const int r = static_cast<int>(comp.size());
            std::vector<Component> cs(r);
            auto dec = [&](auto&& dself, int j) -> void {
                if (j == r) {
                    Index idx{cs};
                    if (keep(idx)) out.push_back(idx);
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

// Evaluates every distinct symbol of the candidate relations into the cache.
inline void prewarm_symbols(const std::vector<Relation>& cands, int digits, int jobs,
                            ValueCache* cache) {
    if (!cache) return;
    std::vector<Index> symbols;
    for (const Relation& r : cands)
        for (const auto& [idx, c] : r.terms) symbols.push_back(idx);
    prewarm_indices(symbols, digits, jobs, cache);
}

}  // namespace detail

// Generates candidate relations of the given weight from the requested
// sources, validates each one numerically, and inserts the survivors.
// Rejections are returned in the report, never dropped silently.
inline HarvestReport harvest(RelationStore& store, int weight, const HarvestOptions& opt,
                             ValueCache* cache = nullptr) {
    if (weight < 1) throw std::invalid_argument("harvest: weight must be >= 1");
    if (weight > 4 && !opt.allow_large)
        throw std::invalid_argument(
            "harvest: weight > 4 enumerates a large symbol set; set allow_large");

    HarvestReport rep;
    rep.weight = weight;

    std::vector<Relation> cands;
    std::set<std::string> local_seen;
    auto push = [&](Relation r) {
        r.normalize();
        if (r.trivial()) return;
        ++rep.candidates;
        if (store.contains(r.weight, r.terms) ||
            !local_seen.insert(RelationStore::serialize_terms(r.terms)).second) {
            ++rep.duplicates;
            return;
        }
        cands.push_back(std::move(r));
    };

    if (opt.finite_dbsf) {
        for (int wa = 1; 2 * wa <= weight; ++wa) {
            const int wb = weight - wa;
            auto left = enumerate_admissible(wa);
            auto right = wa == wb ? left : enumerate_admissible(wb);
            for (std::size_t a = 0; a < left.size(); ++a)
                for (std::size_t b = (wa == wb ? a : 0); b < right.size(); ++b)
                    push(finite_dbsf(left[a], right[b]));
        }
    }

    if (opt.duality) {
        for (const Index& i : enumerate_admissible(weight)) {
            try {
                Relation r;
                r.weight = weight;
                r.terms = LinComb<Index>::unit(i) - dual_index(i);
                r.provenance = "duality " + i.str();
                push(std::move(r));
            } catch (const std::exception&) {
                // Words ending in the wrong letter class have no dual; skip.
            }
        }
    }

    if (opt.reg_dbsf) {
        // Carriers of weight w contribute at their T^0 slice; carriers one
        // weight up shed weight-w relations from their T^1 slice.
        for (int v : {weight, weight + 1}) {
            auto carriers = detail::enumerate_indices_if(
                v, [](const Index& k) { return !k.admissible() && reg_carrier_ok(k); });
            for (const Index& k : carriers)
                for (Relation& r : reg_dbsf_carrier(k))
                    if (r.weight == weight) push(std::move(r));
        }
    }

    detail::prewarm_symbols(cands, opt.digits, opt.jobs, cache);

    PrecisionGuard guard(2 * static_cast<unsigned>(opt.digits) + 30);
    const Real budget = detail::pow10(-(opt.digits - 8));
    for (Relation& r : cands) {
        EvalResult e = eval_lincomb_cached(r.terms, opt.digits, cache);
        Real resid = boost::multiprecision::abs(e.value);
        r.residual = resid.convert_to<double>();
        r.digits = opt.digits;
        if (resid < budget) {
            if (store.insert(std::move(r)))
                ++rep.accepted;
            else
                ++rep.duplicates;
        } else {
            ++rep.rejected;
            std::ostringstream os;
            os << r.provenance << ": residual " << r.residual << " exceeds budget 1e-"
               << (opt.digits - 8);
            rep.rejects.push_back(os.str());
        }
    }
    return rep;
}

// --- exact rank and dimension bounds --------------------------------------------

namespace detail {

// Fraction-free integer echelon form with first-nonzero-column pivoting.
// Rows keep strictly increasing pivot columns; entries are reduced by their
// content after every elimination so coefficients stay small.
class IntEchelon {
  public:
    // Eliminates v against the stored rows; leaves v reduced.  Returns the
    // pivot column of what is left, or -1 when v lies in the row space.
    int reduce(std::vector<Int>& v) const {
        using boost::multiprecision::gcd;
        for (const auto& [pc, row] : rows_) {
            if (v[pc] == 0) continue;
            Int g = gcd(row[pc], v[pc]);
            Int ma = row[pc] / g, mb = v[pc] / g;
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = ma * v[k] - mb * row[k];
            normalize(v);
        }
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) return static_cast<int>(k);
        return -1;
    }

    bool insert(std::vector<Int> v) {
        int pc = reduce(v);
        if (pc < 0) return false;
        if (v[pc] < 0)
            for (Int& e : v) e = -e;
        rows_.emplace(pc, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    static void normalize(std::vector<Int>& v) {
        using boost::multiprecision::gcd;
        Int g(0);
        for (const Int& e : v) {
            g = gcd(g, e);
            if (g == 1) return;
        }
        if (g == 0 || g == 1) return;
        for (Int& e : v) e /= g;
    }

    std::map<int, std::vector<Int>> rows_;
};

}  // namespace detail

// Conjectured dimensions, weights 0..8: AMMV doubles each weight; AMZV is
// Fibonacci-like, AMTV tribonacci-like; AMtV and AMSV from the same tables.
inline int conjectured_dim_ammv(int w) {
    if (w < 0 || w > 30) throw std::invalid_argument("conjectured_dim_ammv: weight range");
    return 1 << w;
}

inline int conjectured_dim(Family f, int w) {
    static constexpr std::array<int, 9> amzv{1, 1, 2, 3, 5, 8, 13, 21, 34};
    static constexpr std::array<int, 9> amtv{1, 1, 3, 6, 12, 24, 48, 96, 192};
    static constexpr std::array<int, 9> amTv{1, 1, 2, 4, 7, 13, 24, 44, 81};
    static constexpr std::array<int, 9> amsv{1, 1, 3, 6, 12, 22, 42, 80, 156};
    if (w < 0 || w > 8) throw std::invalid_argument("conjectured_dim: tabulated for w <= 8");
    switch (f) {
        case Family::AMZV: return amzv[w];
        case Family::AMtV: return amtv[w];
        case Family::AMTV: return amTv[w];
        case Family::AMSV: return amsv[w];
    }
    throw std::invalid_argument("conjectured_dim: unknown family");
}

// All admissible family indices of the given weight: compositions with one
// sign per slot, first slot not (1,+1).
inline std::vector<FamilyIndex> enumerate_family(Family fam, int weight) {
    std::vector<FamilyIndex> out;
    if (weight < 1) return out;
    std::vector<int> comp;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            const int r = static_cast<int>(comp.size());
            std::vector<std::pair<int, int>> cs(r);
            auto dec = [&](auto&& dself, int j) -> void {
                if (j == r) {
                    FamilyIndex f{fam, cs};
                    if (f.admissible()) out.push_back(std::move(f));
                    return;
                }
                for (int sg : {+1, -1}) {
                    cs[j] = {comp[j], sg};
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
    return out;
}

// Validated upper bounds: relations only ever shrink the span, so the
// computed quotient dimension can overshoot the true dimension but never
// undershoot it.  A bound below the conjectured value would mean a wrong
// relation slipped through validation.
struct DimReport {
    int weight = 0;
    int symbols = 0;
    int rank = 0;
    int bound = 0;
    int conjectured = 0;
    int gap = 0;
    std::array<int, 4> family_bound{};
    std::array<int, 4> family_conjectured{};

    static constexpr std::array<Family, 4> families{Family::AMZV, Family::AMtV, Family::AMTV,
                                                    Family::AMSV};

    std::string str() const {
        std::ostringstream os;
        os << "w=" << weight << ": symbols=" << symbols << " rank=" << rank
           << " dim<=" << bound << " conjectured=" << conjectured << " gap=" << gap;
        for (std::size_t i = 0; i < families.size(); ++i)
            os << " | " << family_name(families[i]) << " " << family_bound[i] << "/"
               << family_conjectured[i];
        return os.str();
    }
};

inline DimReport rank_and_dims(int weight, const RelationStore& store,
                               bool allow_large = false) {
    if (weight < 0) throw std::invalid_argument("rank_and_dims: weight must be >= 0");
    if (weight > 4 && !allow_large)
        throw std::invalid_argument(
            "rank_and_dims: weight > 4 enumerates a large symbol set; set allow_large");

    DimReport rep;
    rep.weight = weight;
    const std::vector<Index> symbols = enumerate_admissible(weight);
    rep.symbols = static_cast<int>(symbols.size());
    std::map<Index, int> col;
    for (int k = 0; k < rep.symbols; ++k) col[symbols[k]] = k;

    detail::IntEchelon ech;
    for (const Relation& r : store.at(weight)) {
        Int lcm(1);
        for (const auto& [idx, c] : r.terms)
            lcm = boost::multiprecision::lcm(lcm,
                                             Int(boost::multiprecision::denominator(c)));
        std::vector<Int> v(symbols.size(), Int(0));
        for (const auto& [idx, c] : r.terms) {
            auto it = col.find(idx);
            if (it == col.end())
                throw std::logic_error("rank_and_dims: symbol " + idx.str() +
                                       " missing from the weight-" + std::to_string(weight) +
                                       " enumeration");
            v[it->second] = Int(boost::multiprecision::numerator(c)) *
                            (lcm / Int(boost::multiprecision::denominator(c)));
        }
        ech.insert(std::move(v));
    }
    rep.rank = ech.rank();
    rep.bound = rep.symbols - rep.rank;
    rep.conjectured = conjectured_dim_ammv(weight);
    rep.gap = rep.bound - rep.conjectured;

    for (std::size_t fi = 0; fi < DimReport::families.size(); ++fi) {
        const Family fam = DimReport::families[fi];
        if (weight == 0) {
            rep.family_bound[fi] = 1;
            rep.family_conjectured[fi] = conjectured_dim(fam, 0);
            continue;
        }
        detail::IntEchelon span = ech;  // quotient span = growth over the relation rows
        int dim = 0;
        for (const FamilyIndex& f : enumerate_family(fam, weight)) {
            auto [c, idx] = specialize(f);
            auto it = col.find(idx);
            if (it == col.end())
                throw std::logic_error("rank_and_dims: family image " + idx.str() +
                                       " missing from the symbol enumeration");
            std::vector<Int> v(symbols.size(), Int(0));
            v[it->second] = 1;
            if (span.insert(std::move(v))) ++dim;
        }
        rep.family_bound[fi] = dim;
        rep.family_conjectured[fi] = weight <= 8 ? conjectured_dim(fam, weight) : -1;
    }
    return rep;
}

// --- basis independence checks ---------------------------------------------------

enum class BasisId { MB, tB, TB, SB };

inline std::string basis_name(BasisId b) {
    switch (b) {
        case BasisId::MB: return "MB";
        case BasisId::tB: return "tB";
        case BasisId::TB: return "TB";
        case BasisId::SB: return "SB";
    }
    return "?";
}

// Conjectural basis lists for weights 1..3, spelled in the CLI grammar.
inline const std::vector<std::string>& basis_elements(BasisId b, int weight) {
    static const std::map<std::pair<BasisId, int>, std::vector<std::string>> table{
        {{BasisId::MB, 1}, {"M(b1)", "M(cb1)"}},
        {{BasisId::MB, 2}, {"M(2)", "M(cb2)", "M(b1,1)", "M(cb1,1)"}},
        {{BasisId::MB, 3},
         {"M(3)", "M(cb3)", "M(2,b1)", "M(2,cb1)", "M(b2,c1)", "M(cb2,1)", "M(b1,1,1)",
          "M(cb1,1,1)"}},
        {{BasisId::tB, 1}, {"t(b1)"}},
        {{BasisId::tB, 2}, {"t(2)", "t(b2)", "t(b1,1)"}},
        {{BasisId::tB, 3}, {"t(3)", "t(b3)", "t(2,1)", "t(2,b1)", "t(b1,b2)", "t(b1,1,1)"}},
        {{BasisId::TB, 1}, {"T(b1)"}},
        {{BasisId::TB, 2}, {"T(2)", "T(b2)"}},
        {{BasisId::TB, 3}, {"T(3)", "T(b3)", "T(2,b1)", "T(b2,1)"}},
        {{BasisId::SB, 1}, {"S(b1)"}},
        {{BasisId::SB, 2}, {"S(2)", "S(b1,1)", "S(b1,b1)"}},
        {{BasisId::SB, 3},
         {"S(3)", "S(2,1)", "S(2,b1)", "S(b2,1)", "S(b2,b1)", "S(b1,b2)"}},
    };
    auto it = table.find({b, weight});
    if (it == table.end())
        throw std::invalid_argument("basis_elements: tabulated for weights 1..3");
    return it->second;
}

// Evaluates "M(...)" or a family value to a real at the given digit count.
inline EvalResult eval_symbol_text(const std::string& text, int digits,
                                   ValueCache* cache = nullptr) {
    if (!text.empty() && text[0] == 'M') return eval_index_cached(parse_index(text), digits, cache);
    auto [c, idx] = parse_family_value(text);
    PrecisionGuard guard(2 * static_cast<unsigned>(digits) + 30);
    EvalResult r = eval_index_cached(idx, digits, cache);
    Real rc = to_real(c);
    return {rc * r.value, boost::multiprecision::abs(rc) * r.err};
}

struct BasisCheckReport {
    BasisId basis = BasisId::MB;
    int weight = 0;
    int digits = 0;
    int max_coeff_bits = 0;
    std::vector<std::string> elements;
    bool independent = false;
    std::string diagnostic;

    std::string str() const {
        std::ostringstream os;
        os << basis_name(basis) << "_" << weight << " (" << elements.size() << " values, "
           << digits << " digits, bound 2^" << max_coeff_bits << "): "
           << (independent ? "no integer relation found" : diagnostic);
        return os.str();
    }
};

// Joint PSLQ over a conjectural basis: success means no small integer
// relation exists among the listed values up to the coefficient bound.
inline BasisCheckReport basis_check(BasisId b, int weight, int digits, int max_coeff_bits = 10,
                                    ValueCache* cache = nullptr) {
    BasisCheckReport rep;
    rep.basis = b;
    rep.weight = weight;
    rep.digits = digits;
    rep.max_coeff_bits = max_coeff_bits;
    rep.elements = basis_elements(b, weight);

    PrecisionGuard guard(2 * static_cast<unsigned>(digits) + 30);
    std::vector<Real> vals;
    vals.reserve(rep.elements.size());
    for (const std::string& e : rep.elements)
        vals.push_back(eval_symbol_text(e, digits, cache).value);

    if (vals.size() == 1) {
        rep.independent = boost::multiprecision::abs(vals[0]) > detail::pow10(-(digits / 2));
        rep.diagnostic = rep.independent ? "nonzero" : "value vanishes to working accuracy";
        return rep;
    }
    PslqResult p = pslq(vals, digits, max_coeff_bits);
    if (p.found) {
        rep.independent = false;
        rep.diagnostic = "integer relation " + p.str();
    } else {
        rep.independent = p.diagnostic.rfind("no relation", 0) == 0;
        rep.diagnostic = p.diagnostic;
    }
    return rep;
}

}  // namespace ammv
