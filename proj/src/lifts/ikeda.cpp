#include "lifts/ikeda.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"

namespace heckelab {

ParamMonomial ParamMonomial::times(const ParamMonomial& o) const {
    return ParamMonomial{coeff * o.coeff, sqrt_p + o.sqrt_p, at + o.at, ak + o.ak};
}

ParamMonomial ParamMonomial::inverse() const {
    if (coeff.is_zero()) fail(errc::non_invertible_parameter, "zero parameter");
    return ParamMonomial{Rational(1) / coeff, -sqrt_p, -at, -ak};
}

void ParamMonomial::split(MultiPoly& num, MultiPoly& den) const {
    Monomial nm, dm;
    auto put = [](Monomial& m, Var v, long e) {
        if (e > 0) m = m.times(Monomial::var(v, static_cast<int>(e)));
    };
    put(nm, Var::u, std::max(sqrt_p, 0L));
    put(dm, Var::u, std::max(-sqrt_p, 0L));
    put(nm, Var::at, std::max(at, 0L));
    put(dm, Var::at, std::max(-at, 0L));
    put(nm, Var::ak, std::max(ak, 0L));
    put(dm, Var::ak, std::max(-ak, 0L));
    num = MultiPoly::term(nm, coeff);
    den = MultiPoly::term(dm, Rational(1));
}

std::string ParamMonomial::str() const {
    std::ostringstream os;
    os << coeff.str();
    if (sqrt_p) os << " p^(" << sqrt_p << "/2)";
    if (at) os << " at^" << at;
    if (ak) os << " ak^" << ak;
    return os.str();
}

nlohmann::ordered_json LiftParams::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["genus"] = 2 * n;
    j["weight"] = k;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& b : betas) {
        nlohmann::ordered_json e = nlohmann::ordered_json::object();
        e["coeff"] = b.coeff.str();
        e["sqrt_p_exp"] = b.sqrt_p;
        e["at_exp"] = b.at;
        e["ak_exp"] = b.ak;
        arr.push_back(e);
    }
    j["betas"] = arr;
    return j;
}

IkedaParams ikeda_satake(int n, long k) {
    if (n < 1) fail(errc::invalid_input, "n must be positive");
    IkedaParams out;
    out.params.n = n;
    out.params.k = k;
    auto& b = out.params.betas;
    b.push_back(ParamMonomial{Rational(1), 2 * (n * k - n * (n + 1) / 2), 0, 0});
    for (int i = 1; i <= n; ++i) b.push_back(ParamMonomial{Rational(1), 2 * i - 1, 1, 0});
    for (int i = 1; i <= n; ++i) b.push_back(ParamMonomial{Rational(1), 2 * i - 1, -1, 0});
    if (k % 2 != 0 || ((k - n) % 2) != 0)
        out.warning = "standing hypothesis k even, k = n (mod 2) does not hold";
    return out;
}

LiftParams ikeda_family_satake(int n, long k) {
    if (n < 1) fail(errc::invalid_input, "n must be positive");
    LiftParams lp;
    lp.n = n;
    lp.k = k;
    lp.betas.push_back(ParamMonomial{Rational(1), 2 * (n * k - n * (n + 1) / 2), 0, 0});
    for (int i = 1; i <= n; ++i) lp.betas.push_back(ParamMonomial{Rational(1), 2 * (i - k), 0, 1});
    for (int i = 1; i <= n; ++i)
        lp.betas.push_back(ParamMonomial{Rational(1), 2 * (k + i - 1), 0, -1});

    // consistency: at -> ak p^{1/2-k} inside ikeda_satake reproduces this
    LiftParams classical = ikeda_satake(n, k).params;
    for (size_t j = 0; j < lp.betas.size(); ++j) {
        const ParamMonomial& c = classical.betas[j];
        ParamMonomial subst{c.coeff, c.sqrt_p + c.at * (1 - 2 * k), 0, c.at};
        if (!(subst == lp.betas[j]))
            fail(errc::verification_failed, "family substitution mismatch at index " +
                                                std::to_string(j));
    }
    return lp;
}

LiftCheck check_lift_invariants(const LiftParams& lp) {
    const int n = lp.n;
    long expected0 = 2 * (n * lp.k - n * (n + 1) / 2);
    if (lp.betas.size() != static_cast<size_t>(2 * n + 1))
        return {false, "wrong parameter count"};
    if (!(lp.betas[0].coeff.is_one() && lp.betas[0].sqrt_p == expected0 && lp.betas[0].at == 0 &&
          lp.betas[0].ak == 0))
        return {false, "beta_0 differs from p^{nk - n(n+1)/2}"};
    for (int i = 1; i <= n; ++i) {
        ParamMonomial prod = lp.betas[i].times(lp.betas[n + i]);
        ParamMonomial expect{Rational(1), 2 * (2 * i - 1), 0, 0};
        if (!(prod == expect))
            return {false, "beta_i beta_{n+i} differs from p^{2i-1} at i = " + std::to_string(i)};
    }
    return {true, "beta_0 and pair products match"};
}

namespace {

// (B - A X) for an inverse root A/B given as a ParamMonomial.
struct ClearedLinear {
    MultiPoly num;  // B - A X
    MultiPoly den;  // B
};

ClearedLinear cleared_factor(const ParamMonomial& root) {
    MultiPoly a, b;
    root.split(a, b);
    return ClearedLinear{b - a * MultiPoly::variable(Var::X), b};
}

struct ClearedProduct {
    MultiPoly poly;  // prod (B_i - A_i X)
    MultiPoly den;   // prod B_i
};

ClearedProduct cleared_product(const std::vector<ParamMonomial>& roots) {
    ClearedProduct out{MultiPoly(1), MultiPoly(1)};
    for (const auto& r : roots) {
        ClearedLinear f = cleared_factor(r);
        out.poly = out.poly * f.num;
        out.den = out.den * f.den;
    }
    return out;
}

// canonical key for multiset comparison
std::vector<std::tuple<std::string, long, long, long>> root_multiset(
    const std::vector<ParamMonomial>& roots) {
    std::vector<std::tuple<std::string, long, long, long>> v;
    for (const auto& r : roots) v.emplace_back(r.coeff.str(), r.sqrt_p, r.at, r.ak);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

LiftCheck hecke_quadratic_check(long k) {
    // roots at p^{k-1/2} and at^{-1} p^{k-1/2}
    ParamMonomial r1{Rational(1), 2 * k - 1, 1, 0};
    ParamMonomial r2 = r1.inverse().times(ParamMonomial{Rational(1), 2 * (2 * k - 1), 0, 0});
    ClearedProduct lhs = cleared_product({r1, r2});

    // 1 - a(p) X + p^{2k-1} X^2 with a(p) = u^{2k-1}(at + at^{-1}):
    // multiply by at to clear the inverse: at - u^{2k-1}(at^2 + 1) X
    //                                      + at p^{2k-1} X^2
    MultiPoly at = MultiPoly::variable(Var::at);
    MultiPoly X = MultiPoly::variable(Var::X);
    MultiPoly u_pow = MultiPoly::variable(Var::u, 2 * static_cast<int>(k) - 1);
    MultiPoly rhs_cleared =
        at - u_pow * (at * at + MultiPoly(1)) * X + at * p_power(2 * static_cast<int>(k) - 1) * X * X;
    MultiPoly rhs_den = at;

    // lhs.poly / lhs.den == rhs_cleared / rhs_den
    if (lhs.poly * rhs_den == rhs_cleared * lhs.den)
        return {true, "quadratic relation holds, X^2 coefficient p^" + std::to_string(2 * k - 1)};
    return {false, "quadratic relation fails"};
}

LiftCheck verify_ikeda_standard(int n, long k, bool miyawaki) {
    LiftParams lp = ikeda_satake(n, k).params;
    LiftCheck inv = check_lift_invariants(lp);
    if (!inv.pass) return inv;

    // left side: roots 1, beta_i, beta_i^{-1} (i = 1..2n)
    std::vector<ParamMonomial> lhs_roots{ParamMonomial{}};
    for (int i = 1; i <= 2 * n; ++i) {
        lhs_roots.push_back(lp.betas[i]);
        lhs_roots.push_back(lp.betas[i].inverse());
    }
    // right side: 1 and at^{+-1} p^{j-n-1/2}, j = 1..2n
    std::vector<ParamMonomial> rhs_roots{ParamMonomial{}};
    for (int j = 1; j <= 2 * n; ++j) {
        rhs_roots.push_back(ParamMonomial{Rational(1), 2 * (j - n) - 1, 1, 0});
        rhs_roots.push_back(ParamMonomial{Rational(1), 2 * (j - n) - 1, -1, 0});
    }

    if (root_multiset(lhs_roots) != root_multiset(rhs_roots))
        return {false, "inverse-root multisets differ"};

    ClearedProduct lhs = cleared_product(lhs_roots);
    ClearedProduct rhs = cleared_product(rhs_roots);
    if (!(lhs.poly * rhs.den == rhs.poly * lhs.den))
        return {false, "cleared polynomial identity fails"};

    std::string detail = "standard factor of the lift matches the shifted product, degree " +
                         std::to_string(4 * n + 1);
    if (miyawaki)
        detail += "; f-part of the product formula verified, the remaining standard factor "
                  "of the second form is carried as an uninterpreted unit "
                  "(non-vanishing hypothesis not checked)";
    return {true, detail};
}

LiftCheck eisenstein_lift_evidence(int m, long k) {
    if (m < 1) fail(errc::invalid_input, "m must be positive");
    if (k <= 4 * m) fail(errc::weight_too_small, "evidence needs k > 4m");
    // alpha: genus 2m, weight k; beta: genus 2m, weight k-2m
    std::vector<long> alpha_exp, beta_exp;
    for (int i = 1; i <= 2 * m; ++i) alpha_exp.push_back(k - 2 * m - 1 + i);
    for (int i = 1; i <= 2 * m; ++i) beta_exp.push_back(k - 4 * m - 1 + i);

    // gamma_0 = alpha_0 beta_0 = 1; gammas = alphas then betas
    std::vector<long> gamma = alpha_exp;
    gamma.insert(gamma.end(), beta_exp.begin(), beta_exp.end());
    std::sort(gamma.begin(), gamma.end());
    std::vector<long> expected;
    for (long e = k - 4 * m; e <= k - 1; ++e) expected.push_back(e);
    if (gamma != expected) return {false, "gamma multiset differs from p^{k-4m}..p^{k-1}"};
    return {true, "gamma_0 = 1 and {gamma_i} = {p^{k-4m}, ..., p^{k-1}}, genus " +
                      std::to_string(4 * m) + " (the displayed list is read as the full " +
                      "4m-element multiset)"};
}

}  // namespace heckelab
