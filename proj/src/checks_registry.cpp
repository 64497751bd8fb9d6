#include "checks_common.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ammv::checks {

std::string CheckResult::str() const {
    std::ostringstream os;
    os << id << (pass ? " PASS" : " FAIL");
    if (digits > 0) {
        os << " residual=" << std::scientific << std::setprecision(2) << residual
           << " tol=" << tolerance << " digits=" << std::defaultfloat << digits;
    } else {
        os << " exact";
    }
    os << " t=" << std::fixed << std::setprecision(2) << seconds << "s";
    if (!note.empty()) os << "  " << note;
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"products", "regularization", "duality",
                                                   "arctan",   "parity",         "values"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "products") return run_products(opt);
    if (name == "regularization") return run_regularization(opt);
    if (name == "duality") return run_duality(opt);
    if (name == "arctan") return run_arctan(opt);
    if (name == "parity") return run_parity(opt);
    if (name == "values") return run_values(opt);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const std::string& n : suite_names()) {
            std::vector<CheckResult> part = run_suite(n, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace ammv::checks
