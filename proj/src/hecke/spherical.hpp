#pragma once

#include "core/rational_function.hpp"
#include "hecke/element.hpp"

namespace heckelab {

// Polynomial divided by a pure power of p. The workhorse representation for
// spherical images, which are Laurent in p but polynomial in everything else.
struct PPoly {
    MultiPoly num;
    int p_exp = 0;  // value = num / p^p_exp

    static PPoly from_poly(MultiPoly n) { return PPoly{std::move(n), 0}; }
    bool is_zero() const { return num.is_zero(); }

    // strips common p-powers so that p_exp is minimal
    void normalize();

    PPoly& operator+=(const PPoly& o);
    friend PPoly operator*(const PPoly& a, const PPoly& b);
    friend bool operator==(const PPoly& a, const PPoly& b);

    RationalFunction to_rational_function() const;
};

// Two normalizations of the spherical map coexist. They agree on T(p) and
// T1(p^2) and differ by p^{n(n+1)/2} on [p]:
//   polynomial: [p] -> x0^2 x1 ... xn / p^{n(n+1)/2}
//   eigenvalue: [p] -> x0^2 x1 ... xn
enum class SphericalNorm { polynomial, eigenvalue };

// Image of a single generator variable (left generators map to x-variables,
// right generators to y-variables). Genus 3 has no spherical data and is
// rejected with errc::unsupported_genus.
PPoly spherical_generator_image(int genus, Var gen, SphericalNorm norm);

// Multiplicative extension of the generator images to whole elements.
RationalFunction spherical_image(const HeckeElement& e, SphericalNorm norm);
RationalFunction spherical_image_tensor(const TensorHeckeElement& e, SphericalNorm norm);

// Same maps, returned as PPoly (denominator is always a pure p-power).
PPoly spherical_image_ppoly(const MultiPoly& poly, int genus, SphericalNorm norm);

// Omega(T(p^delta)) from the closed geometric-progression form; the non-p
// denominator factors cancel exactly (certified via exact division).
PPoly omega_tp_delta(int genus, int delta);

// Same value with y-variables in place of x-variables.
PPoly omega_tp_delta_y(int genus, int delta);

// Swaps the variable groups x <-> y.
MultiPoly swap_xy(const MultiPoly& f);

}  // namespace heckelab
