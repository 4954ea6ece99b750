#pragma once

#include <vector>

#include "hecke/element.hpp"
#include "hecke/spherical.hpp"
#include "rankin/pipeline.hpp"

namespace heckelab {

namespace rankin {

// A tensor Hecke element together with a cleared p-power denominator:
// the value is poly / p^{p_exp}. Integral preimages have p_exp == 0.
struct LaurentElement {
    MultiPoly poly;
    int p_exp = 0;

    bool is_zero() const { return poly.is_zero(); }
    // true when the coefficients lie in Z[p, 1/p]
    bool coefficients_integral() const;
};

// Preimage of a Weyl-invariant x0^d y0^d-graded coefficient under
// Omega (x) Omega in the polynomial normalization. The target is a
// polynomial over p (value target.num / p^{target.p_exp}).
//
// The undetermined-coefficient system over the graded candidate monomials
// T^{l0} T1^{l1} [p]^{l2} (x) T^{m0} T1^{m1} [p]^{m2}, l0+2l1+2l2 = m0+2m1+2m2 = d,
// is triangular once rows and columns are sorted by leading monomials (every
// candidate image has a distinct leading monomial with a p-monomial leading
// coefficient), so it is solved by leading-term elimination; a nonzero
// remainder or an exponent pattern outside the grading reports
// errc::not_in_image.
LaurentElement reconstruct_preimage(const PPoly& target, int d, int genus);

// Round-trip guard: image of the reconstruction equals the target.
bool reconstruction_roundtrip_ok(const LaurentElement& e, const PPoly& target, int genus);

// Reconstruction of a full decomposition: the quadratic factor and R, S as
// polynomials in X over the tensor Hecke algebra.
struct Reconstruction {
    int genus = 2;
    std::vector<LaurentElement> quad;  // by X-degree
    std::vector<LaurentElement> r;
    std::vector<LaurentElement> s;

    bool all_integral() const;
    // largest cleared p-denominator over all coefficients (0 means Z[p])
    int max_p_denominator() const;
};

Reconstruction reconstruct_decomposition(const Decomposition& d);

struct FunctionalEquationCheck {
    bool pass = false;
    std::string detail;
};

// s_{D-i} = (multiplier)^{D/2 - i} s_i for i = 0..D/2, with multiplier
// p^6 [p](x)[p] at genus 2 (D = 16) and p^2 [p](x)[p] at genus 1 (D = 4).
FunctionalEquationCheck check_s_functional_equation(const Reconstruction& rec);

}  // namespace rankin

}  // namespace heckelab
