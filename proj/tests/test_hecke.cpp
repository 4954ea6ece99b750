#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/errors.hpp"
#include "hecke/dirichlet.hpp"
#include "hecke/element.hpp"
#include "hecke/euler.hpp"
#include "hecke/spherical.hpp"
#include "test_util.hpp"

using namespace heckelab;
using testutil::Rng;

namespace {
MultiPoly V(Var v, int e = 1) { return MultiPoly::variable(v, e); }
const MultiPoly one(1);
}  // namespace

TEST_CASE("spherical images of the generators") {
    // T(p) at genus 1
    auto t1 = spherical_generator_image(1, Var::Tx, SphericalNorm::polynomial);
    CHECK(t1.p_exp == 0);
    CHECK(t1.num == V(Var::x0) * (one + V(Var::x1)));

    // [p] at genus 2, both normalizations
    auto pe = spherical_generator_image(2, Var::Px, SphericalNorm::eigenvalue);
    CHECK(pe.p_exp == 0);
    CHECK(pe.num == V(Var::x0, 2) * V(Var::x1) * V(Var::x2));
    auto pp = spherical_generator_image(2, Var::Px, SphericalNorm::polynomial);
    CHECK(pp.p_exp == 3);
    CHECK(pp.num == V(Var::x0, 2) * V(Var::x1) * V(Var::x2));
    CHECK(pp.to_rational_function().den() == p_power(3));

    // genus 3 carries no spherical data
    CHECK_THROWS_AS(spherical_generator_image(3, Var::Tx, SphericalNorm::polynomial), Error);
    // right-side generators land in y-variables
    auto ty = spherical_generator_image(1, Var::Ty, SphericalNorm::polynomial);
    CHECK(ty.num == V(Var::y0) * (one + V(Var::y1)));
}

// The image of T1(p^2) is pinned by the classical genus-2 local factor: the
// X^2 coefficient of (1-x0X)(1-x0x1X)(1-x0x2X)(1-x0x1x2X) must be the image
// of p*T1(p^2) + p(p^2+1)*[p].
TEST_CASE("genus-2 T1 image solves the degree-4 factor equation") {
    MultiPoly prod = spinor_factor(SatakeParams::symbolic(2));
    MultiPoly e2 = prod.coefficients_in(Var::X)[2];

    MultiPoly shape = p_power(1) * V(Var::T1x) +
                      p_power(1) * (p_power(2) + one) * V(Var::Px);
    PPoly img = spherical_image_ppoly(shape, 2, SphericalNorm::polynomial);
    CHECK(img == PPoly::from_poly(e2));
}

TEST_CASE("spherical image is a ring homomorphism") {
    Rng rng(31);
    for (int it = 0; it < 12; ++it) {
        MultiPoly a = testutil::random_poly(rng, {Var::p, Var::Tx, Var::T1x, Var::Px}, 4, 2);
        MultiPoly b = testutil::random_poly(rng, {Var::p, Var::Tx, Var::T1x, Var::Px}, 4, 2);
        PPoly ia = spherical_image_ppoly(a, 2, SphericalNorm::polynomial);
        PPoly ib = spherical_image_ppoly(b, 2, SphericalNorm::polynomial);
        PPoly iab = spherical_image_ppoly(a * b, 2, SphericalNorm::polynomial);
        CHECK(iab == ia * ib);
    }
}

TEST_CASE("omega of T(p^delta)") {
    // genus 2, delta = 0 collapses the closed form to 1
    auto d0 = omega_tp_delta(2, 0);
    CHECK(d0.p_exp == 0);
    CHECK(d0.num.is_one());
    // genus 2, delta = 1
    auto d1 = omega_tp_delta(2, 1);
    CHECK(d1.p_exp == 0);
    CHECK(d1.num == V(Var::x0) * (one + V(Var::x1)) * (one + V(Var::x2)));
    // genus 1, delta = 2: geometric sum
    auto g2 = omega_tp_delta(1, 2);
    CHECK(g2.num == V(Var::x0, 2) * (one + V(Var::x1) + V(Var::x1, 2)));
}

TEST_CASE("omega matches the closed-form generating series") {
    for (int genus : {1, 2}) {
        const int order = 8;
        MultiPoly numerator, denominator;
        if (genus == 1) {
            numerator = one;
            denominator = (one - V(Var::x0) * V(Var::X)) *
                          (one - V(Var::x0) * V(Var::x1) * V(Var::X));
        } else {
            // p * (1 - x0^2 x1 x2 X^2 / p) and p * denominator alignment
            numerator = p_power(1) - V(Var::x0, 2) * V(Var::x1) * V(Var::x2) * V(Var::X, 2);
            denominator = (one - V(Var::x0) * V(Var::X)) *
                          (one - V(Var::x0) * V(Var::x1) * V(Var::X)) *
                          (one - V(Var::x0) * V(Var::x2) * V(Var::X)) *
                          (one - V(Var::x0) * V(Var::x1) * V(Var::x2) * V(Var::X));
        }
        TruncatedSeries series =
            TruncatedSeries::from_poly(numerator, order) *
            TruncatedSeries::from_poly(denominator, order).invert();
        for (int delta = 0; delta <= order; ++delta) {
            PPoly direct = omega_tp_delta(genus, delta);
            // the series above carries an extra factor p at genus 2
            PPoly from_series{series.coeff(delta), genus == 2 ? 1 : 0};
            from_series.normalize();
            CHECK(direct == from_series);
        }
    }
}

TEST_CASE("spinor factor shapes") {
    MultiPoly q1 = spinor_factor(SatakeParams::symbolic(1));
    MultiPoly expect = (one - V(Var::x0) * V(Var::X)) * (one - V(Var::x0) * V(Var::x1) * V(Var::X));
    CHECK(q1 == expect);
    CHECK(q1.degree(Var::X) == 2);

    MultiPoly q2 = spinor_factor(SatakeParams::symbolic(2));
    CHECK(q2.degree(Var::X) == 4);
    CHECK(q2.coefficients_in(Var::X)[0].is_one());

    MultiPoly q3 = spinor_factor(SatakeParams::symbolic(3));
    CHECK(q3.degree(Var::X) == 8);
    CHECK(q3.coefficients_in(Var::X)[0].is_one());
}

TEST_CASE("standard factor shapes") {
    // n = 1: (1-X)(1-a1 X)(a1 - X) over a1
    auto f1 = standard_factor(SatakeParams::symbolic(1));
    CHECK(f1.multiplier == V(Var::x1));
    CHECK(f1.cleared == (one - V(Var::X)) * (one - V(Var::x1) * V(Var::X)) *
                            (V(Var::x1) - V(Var::X)));
    CHECK(f1.cleared.degree(Var::X) == 3);

    // all alpha_i = 1 at n = 2 collapses to (1-X)^5
    SatakeParams all_one = SatakeParams::make(2, {one, one, one});
    auto f2 = standard_factor_rational(all_one);
    CHECK(f2.den().is_one());
    CHECK(f2.num() == (one - V(Var::X)).pow(5));

    // n = 3: degree 2n+1 = 7
    auto f3 = standard_factor(SatakeParams::symbolic(3));
    CHECK(f3.cleared.degree(Var::X) == 7);

    // non-monomial parameter is rejected
    SatakeParams bad = SatakeParams::make(1, {V(Var::x0), V(Var::x1) + one});
    CHECK_THROWS_AS(standard_factor(bad), Error);
}

TEST_CASE("triple factor") {
    std::array<std::pair<MultiPoly, MultiPoly>, 3> ones{{{one, one}, {one, one}, {one, one}}};
    CHECK(triple_factor(ones) == (one - V(Var::X)).pow(8));

    std::array<std::pair<MultiPoly, MultiPoly>, 3> sym{{{V(Var::x1), V(Var::y1)},
                                                        {V(Var::x2), V(Var::y2)},
                                                        {V(Var::x3), V(Var::y3)}}};
    MultiPoly t = triple_factor(sym);
    CHECK(t.degree(Var::X) == 8);
    // X^8 coefficient: every parameter appears in four of the eight roots
    MultiPoly q = V(Var::x1) * V(Var::y1) * V(Var::x2) * V(Var::y2) * V(Var::x3) * V(Var::y3);
    CHECK(t.coefficients_in(Var::X)[8] == q.pow(4));
}

TEST_CASE("satake normalization check") {
    // Eisenstein genus 2: alpha = (1, p^{k-2}, p^{k-1})
    for (long k : {4L, 8L, 12L}) {
        auto sp = SatakeParams::eisenstein(2, k);
        CHECK(sp.alpha[1] == p_power(k - 2));
        CHECK(sp.alpha[2] == p_power(k - 1));
        CHECK(check_normalization(sp).pass);
    }
    // forced substitution: alpha_0 = p^2, alpha_1 = p^2, alpha_2 = p^3, k = 6
    auto forced = SatakeParams::make(2, {p_power(2), p_power(2), p_power(3)}, 6);
    CHECK(check_normalization(forced).pass);
    // perturbing alpha_0 by p breaks it
    auto bad = SatakeParams::make(2, {p_power(3), p_power(2), p_power(3)}, 6);
    CHECK_FALSE(check_normalization(bad).pass);
}

TEST_CASE("andrianov genus-3 polynomial") {
    HeckeElement e3 = andrianov_e3();
    auto cs = e3.poly.coefficients_in(Var::X);
    REQUIRE(cs.size() == 7);
    CHECK(cs[0].is_one());
    CHECK(cs[1].is_zero());
    CHECK(cs[5].is_zero());
    CHECK(cs[3] == (V(Var::p) + one) * p_power(4) * V(Var::Tx) * V(Var::Px));
    CHECK(cs[6] == p_power(15) * V(Var::Px, 3));
    // (p^2-p+1)(p^2+p+1) = p^4+p^2+1
    CHECK(cs[2] == -(p_power(2) * (V(Var::T2x) +
                                   (p_power(4) + p_power(2) + one) * V(Var::Px))));

    // 1/E3: zero X coefficient, so the X^2 coefficient of the inverse is
    // minus the X^2 coefficient of E3
    TruncatedSeries inv = TruncatedSeries::from_poly(e3.poly, 2).invert();
    CHECK(inv.coeff(2) == p_power(2) * (V(Var::T2x) + (p_power(4) + p_power(2) + one) * V(Var::Px)));
}

TEST_CASE("hecke element json round trip") {
    MultiPoly e = p_power(2) * V(Var::Tx, 2) * V(Var::Px) - MultiPoly(3) * V(Var::T1x);
    auto j = hecke_element_to_json(e, false);
    CHECK(hecke_element_from_json(j, 2, false) == e);

    MultiPoly t = p_power(4) * V(Var::Px, 2) * V(Var::Py, 2) -
                  V(Var::Tx) * V(Var::Ty) * MultiPoly(2);
    auto jt = hecke_element_to_json(t, true);
    bool found = false;
    for (auto& [k, v] : jt.items())
        if (k == "[p]^2 (x) [p]^2") found = true;
    CHECK(found);
    CHECK(hecke_element_from_json(jt, 1, true) == t);
}

TEST_CASE("dirichlet coefficients from euler factors") {
    // all factors trivial: only h=1 contributes
    DirichletCoefficients d0 = dirichlet_from_euler({{2, one}, {3, one}}, 10);
    CHECK(d0.at(1).is_one());
    for (long h = 2; h <= 10; ++h) CHECK(d0.at(h).is_zero());

    // symbolic genus-1 spinor factor at p=2, numeric at p=3
    MultiPoly f2 = (one - V(Var::x0) * V(Var::X)) * (one - V(Var::x0) * V(Var::x1) * V(Var::X));
    MultiPoly f3 = one - MultiPoly(5) * V(Var::X) + MultiPoly(7) * V(Var::X, 2);
    DirichletCoefficients d = dirichlet_from_euler({{2, f2}, {3, f3}}, 64);

    // three-term recursion lambda(p^{d+1}) = lambda(p) lambda(p^d) - a0^2 a1 lambda(p^{d-1})
    MultiPoly a02a1 = V(Var::x0, 2) * V(Var::x1);
    for (long pd = 2; pd * 2 <= 64; pd *= 2) {
        CHECK(d.at(2 * pd) == d.at(2) * d.at(pd) - a02a1 * d.at(pd / 2));
    }
    // multiplicativity at h = 6
    CHECK(d.at(6) == d.at(2) * d.at(3));
    // prime 5 absent from the map
    CHECK(d.at(5).is_zero());
    CHECK(d.at(10).is_zero());

    // multiplicativity across all coprime pairs up to the bound
    for (long h1 = 2; h1 <= 8; ++h1)
        for (long h2 = 2; h1 * h2 <= 64; ++h2) {
            if (std::gcd(h1, h2) != 1) continue;
            CHECK(d.at(h1 * h2) == d.at(h1) * d.at(h2));
        }

    CHECK_THROWS_AS(dirichlet_from_euler({{4, one}}, 10), Error);
    CHECK_THROWS_AS(dirichlet_from_euler({{2, V(Var::X) + MultiPoly(2)}}, 10), Error);
}
