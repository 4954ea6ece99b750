#include "hecke/spherical.hpp"

#include <map>

#include "core/errors.hpp"

namespace heckelab {

void PPoly::normalize() {
    if (num.is_zero()) {
        p_exp = 0;
        return;
    }
    int strip = std::min(p_exp, num.min_degree(Var::p));
    if (strip > 0) {
        num = exact_divide(num, p_power(strip));
        p_exp -= strip;
    }
}

PPoly& PPoly::operator+=(const PPoly& o) {
    int e = std::max(p_exp, o.p_exp);
    MultiPoly n = num * p_power(e - p_exp) + o.num * p_power(e - o.p_exp);
    num = std::move(n);
    p_exp = e;
    normalize();
    return *this;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
    PPoly r{a.num * b.num, a.p_exp + b.p_exp};
    r.normalize();
    return r;
}

bool operator==(const PPoly& a, const PPoly& b) {
    return a.num * p_power(b.p_exp) == b.num * p_power(a.p_exp);
}

RationalFunction PPoly::to_rational_function() const {
    return RationalFunction(num, p_power(p_exp));
}

namespace {

MultiPoly V(Var v, int e = 1) { return MultiPoly::variable(v, e); }

struct SideVars {
    Var v0, v1, v2;
};

SideVars side_vars(bool right) {
    return right ? SideVars{Var::y0, Var::y1, Var::y2} : SideVars{Var::x0, Var::x1, Var::x2};
}

bool is_right_gen(Var g) { return g == Var::Ty || g == Var::T1y || g == Var::T2y || g == Var::Py; }

}  // namespace

PPoly spherical_generator_image(int genus, Var gen, SphericalNorm norm) {
    if (genus == 3) fail(errc::unsupported_genus, "no spherical data at genus 3");
    if (genus != 1 && genus != 2) fail(errc::unsupported_genus, "genus must be 1 or 2");
    const bool right = is_right_gen(gen);
    const auto [v0, v1, v2] = side_vars(right);
    const MultiPoly x0 = V(v0), x1 = V(v1), x2 = V(v2);

    const bool is_T = gen == Var::Tx || gen == Var::Ty;
    const bool is_T1 = gen == Var::T1x || gen == Var::T1y;
    const bool is_P = gen == Var::Px || gen == Var::Py;
    if (!is_T && !is_T1 && !is_P)
        fail(errc::invalid_input, std::string("not a Hecke generator: ") + var_name(gen));

    if (genus == 1) {
        if (is_T1) fail(errc::invalid_input, "genus 1 has generators T(p) and [p] only");
        if (is_T) return PPoly::from_poly(x0 * (MultiPoly(1) + x1));
        PPoly img{V(v0, 2) * x1, norm == SphericalNorm::polynomial ? 1 : 0};
        return img;
    }

    // genus 2
    if (is_T) return PPoly::from_poly(x0 * (MultiPoly(1) + x1) * (MultiPoly(1) + x2));
    if (is_P) {
        PPoly img{V(v0, 2) * x1 * x2, norm == SphericalNorm::polynomial ? 3 : 0};
        return img;
    }
    // T1(p^2): solved from the X^2 coefficient of the degree-4 local factor
    // (1-x0 X)(1-x0x1 X)(1-x0x2 X)(1-x0x1x2 X) against the classical shape
    // p*T1 + p(p^2+1)*[p].
    MultiPoly body = p_power(2) * (x1 + x2) * (MultiPoly(1) + x1 * x2) +
                     (p_power(2) - MultiPoly(1)) * x1 * x2;
    PPoly img{V(v0, 2) * body, 3};
    img.normalize();
    return img;
}

PPoly spherical_image_ppoly(const MultiPoly& poly, int genus, SphericalNorm norm) {
    if (!hecke_support_ok(poly, genus, true))
        fail(errc::invalid_input, "polynomial is not a (tensor) Hecke element of this genus");
    std::map<std::pair<int, int>, PPoly> power_cache;
    auto gen_power = [&](Var g, int e) -> const PPoly& {
        auto key = std::make_pair(var_index(g), e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        PPoly base = spherical_generator_image(genus, g, norm);
        PPoly r{MultiPoly(1), 0};
        for (int i = 0; i < e; ++i) r = r * base;
        return power_cache.emplace(key, std::move(r)).first->second;
    };

    static constexpr Var kGens[] = {Var::Tx, Var::T1x, Var::T2x, Var::Px,
                                    Var::Ty, Var::T1y, Var::T2y, Var::Py};
    PPoly acc{MultiPoly(), 0};
    for (const auto& [m, c] : poly.terms()) {
        Monomial rest = m;
        PPoly term{MultiPoly(1), 0};
        for (Var g : kGens) {
            int e = m.exp(g);
            if (e == 0) continue;
            rest.e[var_index(g)] = 0;
            term = term * gen_power(g, e);
        }
        term.num.mul_term(rest, c);
        acc += term;
    }
    return acc;
}

RationalFunction spherical_image(const HeckeElement& e, SphericalNorm norm) {
    return spherical_image_ppoly(e.poly, e.genus, norm).to_rational_function();
}

RationalFunction spherical_image_tensor(const TensorHeckeElement& e, SphericalNorm norm) {
    return spherical_image_ppoly(e.poly, e.genus, norm).to_rational_function();
}

PPoly omega_tp_delta(int genus, int delta) {
    if (delta < 0) fail(errc::invalid_input, "delta must be nonnegative");
    if (genus == 1) {
        // x0^d (1 - x1^{d+1}) / (1 - x1)
        MultiPoly num = V(Var::x0, delta) * (MultiPoly(1) - V(Var::x1, delta + 1));
        MultiPoly q = exact_divide(num, MultiPoly(1) - V(Var::x1));
        return PPoly::from_poly(std::move(q));
    }
    if (genus != 2) fail(errc::unsupported_genus, "omega_tp_delta supports genus 1 and 2");
    const MultiPoly x1 = V(Var::x1), x2 = V(Var::x2), p = V(Var::p);
    const MultiPoly one(1);
    MultiPoly num = (one - x1 * x2) * (p * x1 - x2) * x1.pow(delta + 1) +
                    (one - x1 * x2) * (x1 - p * x2) * x2.pow(delta + 1) -
                    (one - p * x1 * x2) * (x1 - x2) * (x1 * x2).pow(delta + 1) -
                    (p - x1 * x2) * (x1 - x2);
    num = -(num * V(Var::x0, delta));
    for (const MultiPoly& f : {one - x1, one - x2, one - x1 * x2, x1 - x2})
        num = exact_divide(num, f);
    PPoly r{std::move(num), 1};
    r.normalize();
    return r;
}

MultiPoly swap_xy(const MultiPoly& f) {
    static constexpr std::pair<Var, Var> kSwaps[] = {
        {Var::x0, Var::y0}, {Var::x1, Var::y1}, {Var::x2, Var::y2},  {Var::x3, Var::y3},
        {Var::Tx, Var::Ty}, {Var::T1x, Var::T1y}, {Var::T2x, Var::T2y}, {Var::Px, Var::Py}};
    MultiPoly out;
    for (const auto& [m, c] : f.terms()) {
        Monomial s = m;
        for (auto [a, b] : kSwaps) std::swap(s.e[var_index(a)], s.e[var_index(b)]);
        out += MultiPoly::term(s, c);
    }
    return out;
}

PPoly omega_tp_delta_y(int genus, int delta) {
    PPoly x = omega_tp_delta(genus, delta);
    return PPoly{swap_xy(x.num), x.p_exp};
}

}  // namespace heckelab
