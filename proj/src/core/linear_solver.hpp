#pragma once

#include <vector>

#include "core/rational.hpp"

namespace heckelab {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

// Solves A x = b exactly. The matrix may have more rows than columns; it must
// have full column rank and the system must be consistent.
//
// The rows are cleared to integers, reduced by fraction-free (Bareiss)
// elimination, and the solution is recovered by exact back substitution.
// Every input row is then re-checked against the solution.
//
// Errors: errc::underdetermined when rank < columns, errc::inconsistent when
// no exact solution exists.
RationalVector solve_linear_exact(const RationalMatrix& a, const RationalVector& b);

}  // namespace heckelab
