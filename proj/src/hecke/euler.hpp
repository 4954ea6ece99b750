#pragma once

#include <array>
#include <optional>
#include <vector>

#include "core/rational_function.hpp"
#include "hecke/element.hpp"

namespace heckelab {

// Satake parameters (alpha_0, ..., alpha_n) of a genus-n eigenform, held as
// polynomial values (symbolic or specialized). The optional weight feeds the
// normalization check alpha_0^2 alpha_1 ... alpha_n = p^{kn - n(n+1)/2}.
struct SatakeParams {
    int genus = 1;
    std::vector<MultiPoly> alpha;  // size genus + 1
    std::optional<long> weight;

    static SatakeParams make(int genus, std::vector<MultiPoly> alpha,
                             std::optional<long> weight = std::nullopt);
    // alpha_i = x_i, fully symbolic
    static SatakeParams symbolic(int genus, std::optional<long> weight = std::nullopt);
    // Siegel-Eisenstein parameters of genus 2m and weight k:
    // alpha_0 = 1, alpha_i = p^{k-2m-1+i}
    static SatakeParams eisenstein(int genus2m, long k);
};

// Spinor Euler polynomial: (1 - a0 X) prod over nonempty subsets
// {i1<...<ir} of (1 - a0 a_{i1}...a_{ir} X); degree 2^n, constant term 1.
MultiPoly spinor_factor(const SatakeParams& sp);

// Standard Euler polynomial of degree 2n+1. Inverse parameters are
// represented by clearing denominators:
//   R(X) = cleared / multiplier,
//   cleared = (1-X) prod_i (1 - a_i X)(a_i - X),  multiplier = prod_i a_i.
// Every alpha_i must be a nonzero monomial (errc::non_invertible_parameter).
struct ClearedFactor {
    MultiPoly cleared;
    MultiPoly multiplier;
};
ClearedFactor standard_factor(const SatakeParams& sp);
// The same value as a normalized fraction (useful when the alphas are
// p-monomials).
RationalFunction standard_factor_rational(const SatakeParams& sp);

// Triple-product Euler polynomial of degree 8: the product over the eight
// sign choices of (1 - a^{(s1)}_1 a^{(s2)}_2 a^{(s3)}_3 X).
MultiPoly triple_factor(const std::array<std::pair<MultiPoly, MultiPoly>, 3>& pairs);

struct CheckReport {
    bool pass = false;
    std::string detail;
};

// lambda([p]) = alpha_0^2 alpha_1...alpha_n = p^{kn-n(n+1)/2}, exactly.
CheckReport check_normalization(const SatakeParams& sp);

// Andrianov's genus-3 numerator polynomial E(X) (degree 6, X-coefficients in
// the genus-3 Hecke algebra).
HeckeElement andrianov_e3();

}  // namespace heckelab
