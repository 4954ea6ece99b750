#pragma once

#include <string>
#include <vector>

#include "core/multipoly.hpp"

namespace heckelab {

// Laurent monomial in sqrt(p), at (the auxiliary Satake unit) and ak (the
// family eigenvalue symbol): value = coeff * sqrt(p)^{sqrt_p} * at^{at} *
// ak^{ak}. Lift parameters need negative exponents (half-integral p-powers
// and inverted units), which the polynomial ring cannot hold directly.
struct ParamMonomial {
    Rational coeff{1};
    long sqrt_p = 0;
    long at = 0;
    long ak = 0;

    bool operator==(const ParamMonomial& o) const = default;

    ParamMonomial times(const ParamMonomial& o) const;
    ParamMonomial inverse() const;  // coeff must be nonzero

    // Splits into polynomial numerator/denominator monomials (u carries the
    // odd half-power of p).
    void split(MultiPoly& num, MultiPoly& den) const;
    std::string str() const;
};

// Satake parameters beta_0..beta_{2n} of a genus-2n lift.
struct LiftParams {
    int n = 1;  // the lift has genus 2n
    long k = 0;
    std::vector<ParamMonomial> betas;  // size 2n + 1

    nlohmann::ordered_json to_json() const;
};

struct LiftCheck {
    bool pass = false;
    std::string detail;
};

// beta_0 = p^{nk - n(n+1)/2}, beta_i = at p^{i - 1/2},
// beta_{n+i} = at^{-1} p^{i - 1/2}. The parity hypothesis k = n (mod 2),
// k even is reported in the returned warning field but not enforced.
struct IkedaParams {
    LiftParams params;
    std::string warning;  // empty when the standing parity hypothesis holds
};
IkedaParams ikeda_satake(int n, long k);

// Family form: beta_i = ak p^{i-k}, beta_{n+i} = ak^{-1} p^{k+i-1};
// substituting at = ak p^{1/2-k} into ikeda_satake reproduces it (checked).
LiftParams ikeda_family_satake(int n, long k);

// beta_0 exponent and beta_i beta_{n+i} = p^{2i-1} for i = 1..n.
LiftCheck check_lift_invariants(const LiftParams& lp);

// (1 - at p^{k-1/2} X)(1 - at^{-1} p^{k-1/2} X) = 1 - a(p) X + p^{2k-1} X^2
// with a(p) = u^{2k-1}(at + at^{-1}), verified as a polynomial identity after
// clearing the at-denominators.
LiftCheck hecke_quadratic_check(long k);

// The standard-degree factorization of the lift: (1-X) prod (1 - beta_i X)
// (1 - beta_i^{-1} X) over i = 1..2n equals (1-X) prod_{j=1}^{2n}
// (1 - at p^{j-n-1/2} X)(1 - at^{-1} p^{j-n-1/2} X), verified both as inverse
// root multisets and as a cleared polynomial identity. When miyawaki is set
// the identity is reported as the f-part of the product formula, the
// remaining standard factor of the second form being an uninterpreted unit.
LiftCheck verify_ikeda_standard(int n, long k, bool miyawaki = false);

// Siegel-Eisenstein evidence for the genus-4m lift: gamma_0 = alpha_0 beta_0
// and {gamma_1..gamma_4m} = {p^{k-4m}, ..., p^{k-1}} as multisets.
LiftCheck eisenstein_lift_evidence(int m, long k);

}  // namespace heckelab
