#pragma once

#include <vector>

#include "core/rational_function.hpp"
#include "core/series.hpp"
#include "hecke/spherical.hpp"

namespace heckelab {

namespace rankin {

// One partial-fraction term c / (1 - x0 y0 m X) of the tensor generating
// series, kept over the structured common denominator p^p_exp * base_den.
struct PartialFraction {
    MultiPoly numerator;     // c's numerator
    MultiPoly base_den;      // X-free denominator part (shared by all terms)
    int p_exp;               // power of p in the denominator (shared)
    MultiPoly x_monomial;    // the monomial x0 y0 m
    MultiPoly x_factor;      // 1 - x0 y0 m X

    RationalFunction value() const;
};

// The geometric decomposition of Omega(T(p^delta)) (x) Omega(T(p^delta)):
// 4 terms at genus 1, 16 at genus 2.
std::vector<PartialFraction> tensor_partial_fractions(int genus);

// Result of summing the partial fractions over the common denominator and
// certifying the predicted cancellations:
//   series = quadratic_factor * (r_num / p^{r_p_exp}) / s
// with s equal to the product of the linear denominator factors.
struct Decomposition {
    int genus = 2;
    std::vector<MultiPoly> denominator_factors;
    MultiPoly quadratic_factor;
    MultiPoly r_num;  // R_{x,y} = r_num / p^{r_p_exp}
    int r_p_exp = 0;
    MultiPoly s;      // S_{x,y}

    PPoly r_coefficient(int d) const;       // X^d coefficient of R as num/p^e
    RationalFunction series_form() const;   // quadratic * R / S
};

Decomposition combine_and_extract(int genus);

// Full tensor generating series as a closed rational function.
RationalFunction tensor_series(int genus);

struct SeriesCheck {
    bool pass = false;
    int checked_up_to = 0;
    std::string detail;
};

// Brute-force oracle: the X^delta coefficient of the closed form must equal
// omega_tp_delta(genus, delta)_x * omega_tp_delta(genus, delta)_y for all
// delta <= max_delta.
SeriesCheck series_oracle_check(const Decomposition& d, int max_delta);

// The genus-1 operator display, as a polynomial in X over the tensor algebra:
// 1 - T(x)T X + (p T^2(x)[p] + p [p](x)T^2 - 2 p^2 [p](x)[p]) X^2
//   - p^2 T[p](x)T[p] X^3 + p^4 [p]^2(x)[p]^2 X^4.
MultiPoly genus1_display_denominator();
// 1 - p^2 [p](x)[p] X^2
MultiPoly genus1_display_quadratic();

struct OperatorFormCheck {
    bool pass = false;
    std::string detail;
};

// Applies Omega (x) Omega to an abstract quadratic/denominator pair and
// compares with the computed decomposition, exactly.
OperatorFormCheck operator_form_check(const Decomposition& d, const MultiPoly& quadratic,
                                      const MultiPoly& denominator);

// Convenience wrapper for the genus-1 display.
OperatorFormCheck genus1_operator_form_check();

}  // namespace rankin

}  // namespace heckelab
