// Command-line frontend: evaluation, products, double-shuffle relations,
// duality, regularization, dimension bounds, integer-relation detection, and
// the built-in verification report.

#include "CLI11.hpp"

#include "ammv/arctan.hpp"
#include "ammv/checks.hpp"
#include "ammv/numerics.hpp"
#include "ammv/pslq.hpp"
#include "ammv/regularization.hpp"
#include "ammv/relations.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Config {
    int digits = 30;
    std::string cache_path;
    std::string store_path;
    int max_digits = 60;
    int max_weight = 4;
};

// Optional key/value config file, path taken from AMMV_CONFIG.
Config load_config() {
    Config cfg;
    const char* path = std::getenv("AMMV_CONFIG");
    if (!path || !*path) return cfg;
    std::ifstream in(path);
    if (!in) {
        std::cerr << "warning: config file " << path << " not readable, using defaults\n";
        return cfg;
    }
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key) || key.empty() || key[0] == '#') continue;
        if (key == "digits")
            ss >> cfg.digits;
        else if (key == "cache")
            ss >> cfg.cache_path;
        else if (key == "store")
            ss >> cfg.store_path;
        else if (key == "max_digits")
            ss >> cfg.max_digits;
        else if (key == "max_weight")
            ss >> cfg.max_weight;
        else
            std::cerr << "warning: unknown config key '" << key << "' ignored\n";
    }
    return cfg;
}

int check_digit_budget(int digits, const Config& cfg, bool force) {
    if (digits < 1) {
        std::cerr << "error: --digits must be positive\n";
        return kExitUsage;
    }
    if (digits > cfg.max_digits && !force) {
        std::cerr << "error: " << digits << " digits exceeds the budget of " << cfg.max_digits
                  << " (pass --force or raise max_digits in the config)\n";
        return kExitBudget;
    }
    return 0;
}

ammv::ValueCache* open_cache(const Config& cfg, ammv::ValueCache& storage) {
    if (cfg.cache_path.empty()) return nullptr;
    storage.load(cfg.cache_path);
    return &storage;
}

void close_cache(const Config& cfg, ammv::ValueCache* cache) {
    if (cache) cache->save(cfg.cache_path);
}

int cmd_eval(const std::string& text, int digits, bool show_word, const Config& cfg) {
    using namespace ammv;
    ValueCache storage;
    ValueCache* cache = open_cache(cfg, storage);

    EvalResult r;
    if (!text.empty() && text[0] == 'w') {
        Word w = parse_word(text);
        r = eval_word(w, digits);
    } else {
        r = eval_symbol_text(text, digits, cache);
    }
    std::cout << text << " = " << r.value.str(digits) << "\n";
    std::cout << "  err <= " << r.err.str(3) << "  (" << digits << " digits)\n";

    if (show_word) {
        Word w;
        int sign = 1;
        if (!text.empty() && text[0] == 'w') {
            w = parse_word(text);
        } else {
            Index idx = text[0] == 'M' ? parse_index(text) : parse_family_value(text).second;
            auto [s, pw] = p_map(idx);
            sign = s;
            w = pw;
            std::cout << "  word: " << (sign < 0 ? "-" : "+") << " " << w.str() << "\n";
        }
        auto cz = word_to_cmzv(w);
        std::cout << "  cmzv: " << cz.str() << "\n";
    }
    close_cache(cfg, cache);
    return 0;
}

int cmd_product(const std::string& kind, const std::string& a_text, const std::string& b_text) {
    using namespace ammv;
    Index a = parse_index(a_text);
    Index b = parse_index(b_text);
    LinComb<Index> out =
        kind == "shuffle" ? shuffle_on_indices(a, b) : stuffle(a, b);
    std::cout << a_text << " * " << b_text << "  [" << kind << "]\n  = " << out.str() << "\n";
    return 0;
}

// Prints relations with their numeric residuals; returns nonzero when any
// residual exceeds the validation budget.
int report_relations(std::vector<ammv::Relation> rels, int digits, const Config& cfg,
                     const std::string& out_path) {
    using namespace ammv;
    ValueCache storage;
    ValueCache* cache = open_cache(cfg, storage);
    const Real budget = boost::multiprecision::pow(Real(10), -(digits - 8));
    bool bad = false;
    {
        PrecisionGuard guard(2 * digits + 30);
        for (Relation& r : rels) {
            Real resid = boost::multiprecision::abs(eval_lincomb_cached(r.terms, digits, cache).value);
            r.residual = resid.convert_to<double>();
            r.digits = digits;
            std::cout << r.str() << "\n  residual " << resid.str(3) << " at " << digits
                      << " digits\n";
            if (resid > budget) {
                bad = true;
                std::cout << "  FAILED validation (budget " << budget.str(3) << ")\n";
            }
        }
    }
    if (!out_path.empty()) {
        RelationStore store;
        store.load(out_path);
        int added = 0;
        for (Relation& r : rels)
            if (store.insert(r)) ++added;
        store.save(out_path);
        std::cout << added << " new relation(s) appended to " << out_path << "\n";
    }
    close_cache(cfg, cache);
    return bad ? kExitCheckFailure : 0;
}

int cmd_dbsf(const std::string& a_text, const std::string& b_text, int digits, const Config& cfg,
             const std::string& out_path) {
    using namespace ammv;
    std::vector<Relation> rels = reg_dbsf(parse_index(a_text), parse_index(b_text));
    if (rels.empty()) {
        std::cout << "double shuffle of " << a_text << " and " << b_text
                  << " is trivial (no relation)\n";
        return 0;
    }
    return report_relations(std::move(rels), digits, cfg, out_path);
}

int cmd_dual(const std::string& text) {
    using namespace ammv;
    Index i = parse_index(text);
    LinComb<Index> image = dual_index(i);
    std::cout << text << "\n  = " << image.str() << "\n";
    return 0;
}

int cmd_reg(const std::string& text) {
    using namespace ammv;
    Index i = parse_index(text);
    std::cout << "stuffle regularization:\n  " << stuffle_reg(i).str() << "\n";
    auto [sgn, w] = p_map(i);
    std::cout << "shuffle regularization of " << (sgn < 0 ? "-" : "") << w.str() << ":\n  "
              << (Rat(sgn) * shuffle_reg(w)).str() << "\n";
    if (!i.admissible() && reg_carrier_ok(i)) {
        std::cout << "carrier relations:\n";
        for (const Relation& r : reg_dbsf_carrier(i)) std::cout << "  " << r.str() << "\n";
    }
    return 0;
}

int cmd_dims(int weight, int digits, int jobs, bool allow_large, const Config& cfg,
             const std::string& store_path) {
    using namespace ammv;
    if (weight > cfg.max_weight && !allow_large) {
        std::cerr << "error: weight " << weight << " exceeds the budget of " << cfg.max_weight
                  << " (pass --allow-large)\n";
        return kExitBudget;
    }
    ValueCache storage;
    ValueCache* cache = open_cache(cfg, storage);
    RelationStore store;
    if (!store_path.empty()) store.load(store_path);
    HarvestOptions opt;
    opt.digits = digits;
    opt.jobs = jobs;
    opt.allow_large = allow_large;
    for (int w = 1; w <= weight; ++w) {
        HarvestReport rep = harvest(store, w, opt, cache);
        std::cout << rep.str() << "\n";
        if (rep.rejected > 0) {
            for (const std::string& s : rep.rejects) std::cout << "  rejected: " << s << "\n";
            close_cache(cfg, cache);
            return kExitCheckFailure;
        }
    }
    DimReport dims = rank_and_dims(weight, store, allow_large);
    std::cout << dims.str() << "\n";
    if (!store_path.empty()) {
        store.save(store_path);
        std::cout << "relation store written to " << store_path << "\n";
    }
    close_cache(cfg, cache);
    if (dims.bound < dims.conjectured) {
        std::cerr << "error: bound fell below the conjectured dimension; "
                     "an invalid relation slipped through\n";
        return kExitCheckFailure;
    }
    return 0;
}

int cmd_pslq(const std::vector<std::string>& value_texts, int digits, int bits,
             const Config& cfg) {
    using namespace ammv;
    ValueCache storage;
    ValueCache* cache = open_cache(cfg, storage);
    std::vector<Real> vals;
    {
        PrecisionGuard guard(2 * digits + 30);
        for (const std::string& t : value_texts) {
            if (t.find_first_of("MTSzt") == 0 && t.find('(') != std::string::npos)
                vals.push_back(eval_symbol_text(t, digits, cache).value);
            else
                vals.push_back(Real(t));
        }
    }
    PslqResult r = pslq(vals, digits, bits);
    std::cout << r.str() << "\n";
    close_cache(cfg, cache);
    return 0;
}

int cmd_verify_paper(const std::string& suite, int digits, int jobs, const Config& cfg,
                     const std::string& out_path) {
    using namespace ammv::checks;
    SuiteOptions opt;
    opt.digits = digits;
    opt.jobs = jobs;
    std::vector<CheckResult> results = run_suite(suite, opt);

    std::ostringstream report;
    report << "# suite=" << suite << " digits-floor=" << digits << " jobs=" << jobs << "\n";
    report << "id\tstatus\tresidual\ttolerance\tdigits\tseconds\tnote\n";
    int failures = 0;
    for (const CheckResult& r : results) {
        report << r.id << '\t' << (r.pass ? "PASS" : "FAIL") << '\t' << std::scientific
               << std::setprecision(2) << r.residual << '\t' << r.tolerance << '\t'
               << r.digits << '\t' << std::fixed << std::setprecision(2) << r.seconds << '\t'
               << r.note << "\n";
        if (!r.pass) ++failures;
    }
    report << "# " << results.size() << " checks, " << failures << " failure(s)\n";
    std::cout << report.str();
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::trunc);
        out << report.str();
    }
    return failures == 0 ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg = load_config();

    CLI::App app{"alternating multiple mixed value toolkit"};
    app.require_subcommand(1);

    std::string text, text_b, kind, suite = "all", out_path, store_path;
    std::vector<std::string> pslq_values;
    int digits = 0;
    int weight = 1, jobs = 1, bits = 40;
    bool show_word = false, allow_large = false, force = false;

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate an index, family value, or word");
    c_eval->add_option("text", text, "e.g. M(2,cb1), T(b2,1), t(b1), z(3)")->required();
    c_eval->add_option("--digits", digits, "significant digits (default from config)");
    c_eval->add_flag("--show-word", show_word, "also print the word and CMZV decomposition");
    c_eval->add_flag("--force", force, "override the digit budget");

    CLI::App* c_prod = app.add_subcommand("product", "expand a shuffle or stuffle product");
    c_prod->add_option("--kind", kind, "shuffle or stuffle")
        ->required()
        ->check(CLI::IsMember({"shuffle", "stuffle"}));
    c_prod->add_option("a", text, "left index")->required();
    c_prod->add_option("b", text_b, "right index")->required();

    CLI::App* c_dbsf = app.add_subcommand("dbsf", "double-shuffle relations of an index pair");
    c_dbsf->add_option("a", text, "first index (may be divergent)")->required();
    c_dbsf->add_option("b", text_b, "second index (admissible)")->required();
    c_dbsf->add_option("--digits", digits, "validation digits (default 25)");
    c_dbsf->add_option("--out", out_path, "append validated relations to this store file");
    c_dbsf->add_flag("--force", force, "override the digit budget");

    CLI::App* c_dual = app.add_subcommand("dual", "duality image of an admissible index");
    c_dual->add_option("index", text, "index text")->required();

    CLI::App* c_reg = app.add_subcommand("reg", "regularizations and carrier relations");
    c_reg->add_option("index", text, "index text")->required();

    CLI::App* c_dims = app.add_subcommand("dims", "harvest relations and bound dimensions");
    c_dims->add_option("--weight", weight, "target weight")->required();
    c_dims->add_option("--digits", digits, "validation digits (default 25)");
    c_dims->add_option("--jobs", jobs, "worker threads");
    c_dims->add_option("--store", store_path, "load/save the relation store here");
    c_dims->add_flag("--allow-large", allow_large, "permit weights above the configured budget");
    c_dims->add_flag("--force", force, "override the digit budget");

    CLI::App* c_pslq = app.add_subcommand("pslq", "integer-relation detection");
    c_pslq->add_option("values", pslq_values, "decimal literals or symbol texts")
        ->required()
        ->expected(-2);
    c_pslq->add_option("--digits", digits, "working digits (default 25)");
    c_pslq->add_option("--bits", bits, "coefficient bound as a power of two");
    c_pslq->add_flag("--force", force, "override the digit budget");

    CLI::App* c_verify = app.add_subcommand("verify-paper", "run the built-in identity catalogue");
    c_verify->add_option("--suite", suite, "products|regularization|duality|arctan|parity|values|all")
        ->check(CLI::IsMember({"products", "regularization", "duality", "arctan", "parity",
                               "values", "all"}));
    c_verify->add_option("--digits", digits, "floor on evaluation digits (default 30)");
    c_verify->add_option("--jobs", jobs, "worker threads");
    c_verify->add_option("--out", out_path, "also write the TSV report to this file");
    c_verify->add_flag("--force", force, "override the digit budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c_eval) {
            if (digits == 0) digits = cfg.digits;
            if (int rc = check_digit_budget(digits, cfg, force)) return rc;
            return cmd_eval(text, digits, show_word, cfg);
        }
        if (*c_prod) return cmd_product(kind, text, text_b);
        if (*c_dbsf) {
            if (digits == 0) digits = 25;
            if (int rc = check_digit_budget(digits, cfg, force)) return rc;
            return cmd_dbsf(text, text_b, digits, cfg, out_path);
        }
        if (*c_dual) return cmd_dual(text);
        if (*c_reg) return cmd_reg(text);
        if (*c_dims) {
            if (digits == 0) digits = 25;
            if (int rc = check_digit_budget(digits, cfg, force)) return rc;
            return cmd_dims(weight, digits, jobs, allow_large, cfg, store_path);
        }
        if (*c_pslq) {
            if (digits == 0) digits = 25;
            if (int rc = check_digit_budget(digits, cfg, force)) return rc;
            return cmd_pslq(pslq_values, digits, bits, cfg);
        }
        if (*c_verify) {
            if (digits == 0) digits = cfg.digits;
            if (int rc = check_digit_budget(digits, cfg, force)) return rc;
            return cmd_verify_paper(suite, digits, jobs, cfg, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
