#include "rankin/pipeline.hpp"

#include "core/errors.hpp"
#include "core/parallel.hpp"

namespace heckelab {

namespace rankin {

namespace {

MultiPoly V(Var v, int e = 1) { return MultiPoly::variable(v, e); }
const MultiPoly one(1);

// Geometric decomposition of Omega_x(T(p^delta)) = sum_m c_m m^delta x0^delta:
// the monomials m and numerators of c_m over the shared denominator
// p^p_exp * prod(den_factors).
struct SideDecomposition {
    std::vector<std::pair<MultiPoly, MultiPoly>> parts;  // (m, numerator of c_m)
    std::vector<MultiPoly> den_factors;
    int p_exp;
};

SideDecomposition side_decomposition(int genus) {
    if (genus == 1) {
        MultiPoly x1 = V(Var::x1);
        return SideDecomposition{
            {{one, one}, {x1, -x1}},
            {one - x1},
            0,
        };
    }
    if (genus != 2) fail(errc::unsupported_genus, "tensor series supports genus 1 and 2");
    MultiPoly p = V(Var::p), x1 = V(Var::x1), x2 = V(Var::x2);
    MultiPoly q = x1 * x2;
    return SideDecomposition{
        {
            {x1, -((one - q) * (p * x1 - x2) * x1)},
            {x2, -((one - q) * (x1 - p * x2) * x2)},
            {q, (one - p * q) * (x1 - x2) * q},
            {one, (p - q) * (x1 - x2)},
        },
        {one - x1, one - x2, one - q, x1 - x2},
        1,
    };
}

}  // namespace

RationalFunction PartialFraction::value() const {
    return RationalFunction(numerator, p_power(p_exp) * base_den * x_factor);
}

std::vector<PartialFraction> tensor_partial_fractions(int genus) {
    SideDecomposition x = side_decomposition(genus);
    MultiPoly base_den = x.den_factors[0];
    for (size_t i = 1; i < x.den_factors.size(); ++i) base_den = base_den * x.den_factors[i];
    base_den = base_den * swap_xy(base_den);
    const int p_exp = 2 * x.p_exp;

    std::vector<PartialFraction> out;
    for (const auto& [mx, nx] : x.parts) {
        for (const auto& [my0, ny0] : x.parts) {
            MultiPoly my = swap_xy(my0), ny = swap_xy(ny0);
            MultiPoly mono = V(Var::x0) * V(Var::y0) * mx * my;
            out.push_back(PartialFraction{
                nx * ny,
                base_den,
                p_exp,
                mono,
                one - mono * V(Var::X),
            });
        }
    }
    return out;
}

Decomposition combine_and_extract(int genus) {
    std::vector<PartialFraction> terms = tensor_partial_fractions(genus);

    // product of all linear X-factors
    MultiPoly s(1);
    for (const auto& t : terms) s = s * t.x_factor;

    // numerator over the common denominator, one cofactor per term
    std::vector<MultiPoly> contributions(terms.size());
    parallel_for_index(terms.size(), [&](size_t i) {
        MultiPoly cofactor = exact_divide(s, terms[i].x_factor);
        contributions[i] = terms[i].numerator * cofactor;
    });
    MultiPoly n;
    for (const auto& c : contributions) n += c;

    // the X-free denominator factors must cancel exactly
    SideDecomposition side = side_decomposition(genus);
    for (const auto& f : side.den_factors) {
        n = exact_divide(n, f);
        n = exact_divide(n, swap_xy(f));
    }

    // extract the quadratic factor
    MultiPoly quad_mono = V(Var::x0, 2) * V(Var::y0, 2) * V(Var::x1) * V(Var::y1);
    if (genus == 2) quad_mono = quad_mono * V(Var::x2) * V(Var::y2);
    MultiPoly quadratic = one - quad_mono * V(Var::X, 2);
    n = exact_divide(n, quadratic);

    Decomposition d;
    d.genus = genus;
    for (const auto& t : terms) d.denominator_factors.push_back(t.x_factor);
    d.quadratic_factor = std::move(quadratic);
    d.r_num = std::move(n);
    d.r_p_exp = 2 * side.p_exp;
    d.s = std::move(s);

    // strip p-powers shared by every coefficient of R
    PPoly r{d.r_num, d.r_p_exp};
    r.normalize();
    d.r_num = std::move(r.num);
    d.r_p_exp = r.p_exp;

    const int expected_r_deg = genus == 2 ? 12 : 0;
    if (d.r_num.degree(Var::X) != expected_r_deg)
        fail(errc::verification_failed, "unexpected degree of R: " +
                                            std::to_string(d.r_num.degree(Var::X)));
    if (d.s.degree(Var::X) != static_cast<int>(terms.size()))
        fail(errc::verification_failed, "unexpected degree of S");
    return d;
}

PPoly Decomposition::r_coefficient(int d) const {
    auto cs = r_num.coefficients_in(Var::X);
    PPoly r{d < static_cast<int>(cs.size()) ? cs[d] : MultiPoly(), r_p_exp};
    r.normalize();
    return r;
}

RationalFunction Decomposition::series_form() const {
    return RationalFunction(quadratic_factor * r_num, p_power(r_p_exp) * s);
}

RationalFunction tensor_series(int genus) { return combine_and_extract(genus).series_form(); }

SeriesCheck series_oracle_check(const Decomposition& d, int max_delta) {
    TruncatedSeries numerator = TruncatedSeries::from_poly(d.quadratic_factor * d.r_num, max_delta);
    TruncatedSeries expansion = numerator * TruncatedSeries::from_poly(d.s, max_delta).invert();
    for (int delta = 0; delta <= max_delta; ++delta) {
        PPoly lhs{expansion.coeff(delta), d.r_p_exp};
        lhs.normalize();
        PPoly rhs = omega_tp_delta(d.genus, delta) * omega_tp_delta_y(d.genus, delta);
        if (!(lhs == rhs))
            return {false, delta,
                    "series coefficient mismatch at X^" + std::to_string(delta)};
    }
    return {true, max_delta, "series coefficients match the omega products"};
}

MultiPoly genus1_display_denominator() {
    MultiPoly X = V(Var::X);
    MultiPoly T = V(Var::Tx), P = V(Var::Px), Ty = V(Var::Ty), Py = V(Var::Py);
    MultiPoly p = V(Var::p);
    return one - T * Ty * X +
           (p * T.pow(2) * Py + p * P * Ty.pow(2) - MultiPoly(2) * p.pow(2) * P * Py) * X.pow(2) -
           p.pow(2) * T * P * Ty * Py * X.pow(3) + p.pow(4) * P.pow(2) * Py.pow(2) * X.pow(4);
}

MultiPoly genus1_display_quadratic() {
    return one - p_power(2) * V(Var::Px) * V(Var::Py) * V(Var::X, 2);
}

OperatorFormCheck operator_form_check(const Decomposition& d, const MultiPoly& quadratic,
                                      const MultiPoly& denominator) {
    PPoly quad_image = spherical_image_ppoly(quadratic, d.genus, SphericalNorm::polynomial);
    PPoly expected_quad{d.quadratic_factor, 0};
    if (!(quad_image == expected_quad))
        return {false, "quadratic factor image differs from the computed factor"};

    // series = quad * den^{-1} under the spherical map and also
    // series = quadratic_factor * R / S, so R * image(den) must equal S.
    PPoly den_image = spherical_image_ppoly(denominator, d.genus, SphericalNorm::polynomial);
    if (!(den_image * PPoly{d.r_num, d.r_p_exp} == PPoly{d.s, 0}))
        return {false, "denominator image times R differs from the computed S"};
    return {true, "operator display reproduces the computed decomposition"};
}

OperatorFormCheck genus1_operator_form_check() {
    Decomposition d = combine_and_extract(1);
    return operator_form_check(d, genus1_display_quadratic(), genus1_display_denominator());
}

}  // namespace rankin

}  // namespace heckelab
