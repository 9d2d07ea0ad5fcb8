#pragma once

// JSON rendering of polynomials: a list of {coeff: decimal-string,
// exps: [7 ints]} records in the same canonical order as the text form.

#include <json.hpp>

#include "qylag/mpoly.hpp"

namespace qylag {

nlohmann::json poly_terms_json(const MPoly& p);

}  // namespace qylag
