#include "hecke/euler.hpp"

#include "core/errors.hpp"

namespace heckelab {

namespace {
MultiPoly V(Var v, int e = 1) { return MultiPoly::variable(v, e); }
const Var kAlphaVars[4] = {Var::x0, Var::x1, Var::x2, Var::x3};
}  // namespace

SatakeParams SatakeParams::make(int genus, std::vector<MultiPoly> alpha,
                                std::optional<long> weight) {
    if (genus < 1 || genus > 3) fail(errc::unsupported_genus, "genus must be 1, 2 or 3");
    if (alpha.size() != static_cast<size_t>(genus) + 1)
        fail(errc::invalid_input, "expected " + std::to_string(genus + 1) + " Satake parameters");
    return SatakeParams{genus, std::move(alpha), weight};
}

SatakeParams SatakeParams::symbolic(int genus, std::optional<long> weight) {
    std::vector<MultiPoly> a;
    for (int i = 0; i <= genus; ++i) a.push_back(V(kAlphaVars[i]));
    return make(genus, std::move(a), weight);
}

SatakeParams SatakeParams::eisenstein(int genus2m, long k) {
    if (genus2m < 2 || genus2m % 2 != 0) fail(errc::invalid_input, "Eisenstein genus must be even");
    if (k <= genus2m) fail(errc::weight_too_small, "need k > genus");
    std::vector<MultiPoly> a;
    a.push_back(MultiPoly(1));
    for (int i = 1; i <= genus2m; ++i) a.push_back(p_power(static_cast<int>(k) - genus2m - 1 + i));
    return SatakeParams{genus2m, std::move(a), k};
}

MultiPoly spinor_factor(const SatakeParams& sp) {
    const int n = sp.genus;
    const MultiPoly X = V(Var::X);
    MultiPoly out(1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        MultiPoly root = sp.alpha[0];
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) root = root * sp.alpha[i];
        out = out * (MultiPoly(1) - root * X);
    }
    return out;
}

ClearedFactor standard_factor(const SatakeParams& sp) {
    const int n = sp.genus;
    const MultiPoly X = V(Var::X);
    MultiPoly cleared = MultiPoly(1) - X;
    MultiPoly multiplier(1);
    for (int i = 1; i <= n; ++i) {
        const MultiPoly& a = sp.alpha[i];
        if (!a.is_monomial())
            fail(errc::non_invertible_parameter,
                 "alpha_" + std::to_string(i) + " is not a nonzero monomial");
        cleared = cleared * (MultiPoly(1) - a * X) * (a - X);
        multiplier = multiplier * a;
    }
    return ClearedFactor{std::move(cleared), std::move(multiplier)};
}

RationalFunction standard_factor_rational(const SatakeParams& sp) {
    ClearedFactor f = standard_factor(sp);
    return RationalFunction(std::move(f.cleared), std::move(f.multiplier));
}

MultiPoly triple_factor(const std::array<std::pair<MultiPoly, MultiPoly>, 3>& pairs) {
    const MultiPoly X = V(Var::X);
    MultiPoly out(1);
    for (int mask = 0; mask < 8; ++mask) {
        MultiPoly root(1);
        for (int j = 0; j < 3; ++j)
            root = root * ((mask >> j) & 1 ? pairs[j].second : pairs[j].first);
        out = out * (MultiPoly(1) - root * X);
    }
    return out;
}

CheckReport check_normalization(const SatakeParams& sp) {
    if (!sp.weight) fail(errc::invalid_input, "normalization check needs a weight");
    const int n = sp.genus;
    const long k = *sp.weight;
    long exponent = k * n - n * (n + 1) / 2;
    if (exponent < 0) fail(errc::weight_too_small, "kn - n(n+1)/2 is negative");
    MultiPoly lhs = sp.alpha[0] * sp.alpha[0];
    for (int i = 1; i <= n; ++i) lhs = lhs * sp.alpha[i];
    MultiPoly rhs = p_power(static_cast<int>(exponent));
    if (lhs == rhs) return {true, "alpha_0^2 alpha_1..alpha_n = p^" + std::to_string(exponent)};
    return {false, "alpha_0^2 alpha_1..alpha_n = " + lhs.str() + " differs from p^" +
                       std::to_string(exponent)};
}

HeckeElement andrianov_e3() {
    const MultiPoly X = V(Var::X);
    const MultiPoly T = V(Var::Tx), T2 = V(Var::T2x), P = V(Var::Px);
    const MultiPoly cyclotomic = (p_power(2) - V(Var::p) + MultiPoly(1)) *
                                 (p_power(2) + V(Var::p) + MultiPoly(1));
    const MultiPoly bracket = T2 + cyclotomic * P;
    MultiPoly e = MultiPoly(1) - p_power(2) * bracket * X.pow(2) +
                  (V(Var::p) + MultiPoly(1)) * p_power(4) * T * P * X.pow(3) -
                  p_power(7) * P * bracket * X.pow(4) + p_power(15) * P.pow(3) * X.pow(6);
    return HeckeElement::make(3, std::move(e));
}

}  // namespace heckelab
