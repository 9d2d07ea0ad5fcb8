#include "qylag/render.hpp"

#include <sstream>

namespace qylag {

nlohmann::json poly_terms_json(const MPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        std::ostringstream coeff;
        coeff << c;
        nlohmann::json exps = nlohmann::json::array();
        for (std::size_t i = 0; i < kVarCount; ++i) exps.push_back(e[i]);
        terms.push_back({{"coeff", coeff.str()}, {"exps", exps}});
    }
    return terms;
}

}  // namespace qylag
