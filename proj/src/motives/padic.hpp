#pragma once

#include <string>

#include <json.hpp>

#include "core/rational.hpp"

namespace heckelab {

// Growth class of the p-adic interpolation attached to a smallest inverse
// root of valuation ord_alpha: bounded when the valuation vanishes, else
// logarithmic growth o(log^h) with h = floor(2 ord) + 1.
struct AdmissibilityReport {
    Rational ord_alpha;
    bool bounded = false;
    long h = 0;  // meaningful when not bounded

    nlohmann::ordered_json to_json() const;
};

AdmissibilityReport padic_admissibility(const Rational& ord_alpha);

}  // namespace heckelab
