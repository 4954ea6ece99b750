#pragma once

#include <map>

#include "core/series.hpp"

namespace heckelab {

// Coefficients T_E(h) of a formal Dirichlet series assembled from local Euler
// factors: the value at h = prod p^{d_p} is the product over p of the
// X^{d_p}-coefficient of the inverted factor at p. Primes missing from the
// factor map contribute only at exponent 0.
struct DirichletCoefficients {
    long bound = 0;
    std::map<long, MultiPoly> coeff;  // defined for 1 <= h <= bound

    const MultiPoly& at(long h) const;
};

DirichletCoefficients dirichlet_from_euler(const std::map<long, MultiPoly>& factors, long bound);

}  // namespace heckelab
