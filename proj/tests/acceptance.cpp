// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. The genus-2 pipeline artifacts are computed once and
// shared by the criteria that inspect them.

#include <chrono>
#include <complex>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <vector>

#include "core/errors.hpp"
#include "hecke/dirichlet.hpp"
#include "hecke/euler.hpp"
#include "hecke/spherical.hpp"
#include "lifts/families.hpp"
#include "lifts/ikeda.hpp"
#include "motives/gamma.hpp"
#include "motives/hodge.hpp"
#include "rankin/newton.hpp"
#include "rankin/pipeline.hpp"
#include "rankin/reconstruct.hpp"
#include "test_util.hpp"

using namespace heckelab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int n, bool pass, const std::string& what) {
    std::printf("%s - criterion %2d: %s\n", pass ? "PASS" : "FAIL", n, what.c_str());
    if (!pass) ++g_failures;
}

MultiPoly V(Var v, int e = 1) { return MultiPoly::variable(v, e); }
const MultiPoly one(1);

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    // ---------- criterion 1: genus-1 Rankin lemma ----------
    {
        auto t0 = Clock::now();
        bool ok = false;
        std::string note;
        try {
            rankin::Decomposition d = rankin::combine_and_extract(1);
            MultiPoly quad_expected =
                one - V(Var::x0, 2) * V(Var::y0, 2) * V(Var::x1) * V(Var::y1) * V(Var::X, 2);
            MultiPoly s_expected = (one - V(Var::x0) * V(Var::y0) * V(Var::X)) *
                                   (one - V(Var::x0) * V(Var::y0) * V(Var::x1) * V(Var::X)) *
                                   (one - V(Var::x0) * V(Var::y0) * V(Var::y1) * V(Var::X)) *
                                   (one - V(Var::x0) * V(Var::y0) * V(Var::x1) * V(Var::y1) *
                                              V(Var::X));
            bool closed_form = d.quadratic_factor == quad_expected && d.r_num.is_one() &&
                               d.r_p_exp == 0 && d.s == s_expected;
            bool operator_form = rankin::genus1_operator_form_check().pass;
            double dt = seconds_since(t0);
            ok = closed_form && operator_form && dt < 1.0;
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "genus-1 tensor series equals the closed form and the operator "
                          "display verifies (%.2fs)",
                          dt);
            note = buf;
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        report(1, ok, note);
    }

    // ---------- genus-2 pipeline, shared ----------
    auto t2 = Clock::now();
    rankin::Decomposition d2;
    bool have_d2 = false;
    std::string d2_err;
    try {
        d2 = rankin::combine_and_extract(2);
        have_d2 = true;
    } catch (const std::exception& e) {
        d2_err = e.what();
    }
    double d2_time = seconds_since(t2);

    // ---------- criterion 2: genus-2 Rankin lemma ----------
    {
        bool ok = false;
        std::string note = d2_err;
        if (have_d2) {
            auto terms = rankin::tensor_partial_fractions(2);
            MultiPoly s_expected(1);
            for (const auto& t : terms) s_expected = s_expected * t.x_factor;
            MultiPoly quad_expected = one - V(Var::x0, 2) * V(Var::y0, 2) * V(Var::x1) *
                                                V(Var::y1) * V(Var::x2) * V(Var::y2) *
                                                V(Var::X, 2);
            auto r_cs = d2.r_num.coefficients_in(Var::X);
            bool degrees_ok = d2.r_num.degree(Var::X) == 12 && r_cs[1].is_zero() &&
                              r_cs[11].is_zero() && d2.s.degree(Var::X) == 16;
            bool r_const = d2.r_p_exp == 2 && r_cs[0] == p_power(2);
            MultiPoly lead_expected = V(Var::x0, 12) * V(Var::y0, 12) * V(Var::x1, 6) *
                                      V(Var::x2, 6) * V(Var::y1, 6) * V(Var::y2, 6);
            bool r_lead = r_cs[12] == lead_expected;
            ok = terms.size() == 16 && d2.s == s_expected &&
                 d2.quadratic_factor == quad_expected && degrees_ok && r_const && r_lead &&
                 d2_time < 300.0;
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "genus-2: 16 terms, 16-factor denominator, quadratic factor, "
                          "deg R = 12 (no X^1, X^11), deg S = 16, R(0) = 1, leading term "
                          "p^-2 x0^12 y0^12 (x1 x2 y1 y2)^6 (%.2fs)",
                          d2_time);
            note = buf;
        }
        report(2, ok, note);
    }

    // ---------- criterion 3: reconstruction round trip ----------
    rankin::Reconstruction rec2;
    bool have_rec2 = false;
    {
        bool ok = false;
        std::string note = d2_err;
        if (have_d2) {
            try {
                rec2 = rankin::reconstruct_decomposition(d2);  // round-trips internally
                have_rec2 = true;
                bool roundtrip = true;
                auto s_cs = d2.s.coefficients_in(Var::X);
                for (size_t k = 0; k < s_cs.size(); ++k) {
                    PPoly target{s_cs[k], 0};
                    target.normalize();
                    if (target.is_zero()) continue;
                    roundtrip = roundtrip &&
                                rankin::reconstruction_roundtrip_ok(rec2.s[k], target, 2);
                }
                auto r_cs = d2.r_num.coefficients_in(Var::X);
                for (size_t k = 0; k < r_cs.size(); ++k) {
                    PPoly target{r_cs[k], d2.r_p_exp};
                    target.normalize();
                    if (target.is_zero()) continue;
                    roundtrip = roundtrip &&
                                rankin::reconstruction_roundtrip_ok(rec2.r[k], target, 2);
                }
                bool integral = rec2.all_integral() && rec2.max_p_denominator() == 0;
                bool r_gaps = rec2.r[1].is_zero() && rec2.r[11].is_zero();
                ok = roundtrip && integral && r_gaps;
                note = "every R, S coefficient round-trips through the spherical map; "
                       "coefficients lie in Z[p]; r_1 = r_11 = 0";
            } catch (const std::exception& e) {
                note = std::string("exception: ") + e.what();
            }
        }
        report(3, ok, note);
    }

    // ---------- criterion 4: functional equation ----------
    {
        bool ok = false;
        std::string note = d2_err;
        if (have_rec2) {
            auto fe2 = rankin::check_s_functional_equation(rec2);
            bool g1_ok = false;
            try {
                rankin::Reconstruction rec1 =
                    rankin::reconstruct_decomposition(rankin::combine_and_extract(1));
                auto fe1 = rankin::check_s_functional_equation(rec1);
                MultiPoly s4_expected = p_power(4) * V(Var::Px, 2) * V(Var::Py, 2);
                g1_ok = fe1.pass && rec1.s[4].poly == s4_expected && rec1.s[4].p_exp == 0;
            } catch (const std::exception&) {
            }
            ok = fe2.pass && g1_ok;
            note = "s_(16-i) = (p^6 [p](x)[p])^(8-i) s_i for i = 0..8; genus-1 analogue "
                   "s_4 = p^4 [p]^2 (x) [p]^2";
        }
        report(4, ok, note);
    }

    // ---------- criterion 5: series oracle ----------
    {
        bool ok = false;
        std::string note = d2_err;
        if (have_d2) {
            rankin::SeriesCheck sc = rankin::series_oracle_check(d2, 6);
            // cross-check of omega against the single-series closed form with
            // numerator p - x0^2 x1 x2 X^2 over p
            bool closed_ok = true;
            MultiPoly num = p_power(1) - V(Var::x0, 2) * V(Var::x1) * V(Var::x2) * V(Var::X, 2);
            MultiPoly den = (one - V(Var::x0) * V(Var::X)) *
                            (one - V(Var::x0) * V(Var::x1) * V(Var::X)) *
                            (one - V(Var::x0) * V(Var::x2) * V(Var::X)) *
                            (one - V(Var::x0) * V(Var::x1) * V(Var::x2) * V(Var::X));
            TruncatedSeries series = TruncatedSeries::from_poly(num, 6) *
                                     TruncatedSeries::from_poly(den, 6).invert();
            for (int delta = 0; delta <= 6; ++delta) {
                PPoly lhs{series.coeff(delta), 1};
                lhs.normalize();
                closed_ok = closed_ok && lhs == omega_tp_delta(2, delta);
            }
            ok = sc.pass && closed_ok;
            note = "X^delta coefficients equal omega_x * omega_y for delta <= 6, and omega "
                   "matches the closed-form series";
        }
        report(5, ok, note);
    }

    // ---------- criterion 6: Newton polygons ----------
    {
        bool ok = false;
        std::string note = d2_err;
        if (have_rec2) {
            std::vector<MultiPoly> rc, sc;
            for (const auto& e : rec2.r) rc.push_back(e.poly);
            for (const auto& e : rec2.s) sc.push_back(e.poly);
            NewtonPolygon npr = newton_from_coefficients(rc);
            NewtonPolygon nps = newton_from_coefficients(sc);
            ok = npr.slopes_integral() && nps.slopes_integral();
            bool match = npr.height == Rational(34) && nps.height == Rational(48);
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "all slopes integral; heights R = %s, S = %s "
                          "(reference heights 34 and 48: %s, informational)",
                          npr.height.str().c_str(), nps.height.str().c_str(),
                          match ? "match" : "differ");
            note = buf;
        }
        report(6, ok, note);
    }

    // ---------- criterion 7: Euler factor degrees and normalization ----------
    {
        bool ok = true;
        for (int n = 1; n <= 3; ++n) {
            ok = ok && spinor_factor(SatakeParams::symbolic(n)).degree(Var::X) == (1 << n);
            ok = ok && standard_factor(SatakeParams::symbolic(n)).cleared.degree(Var::X) ==
                           2 * n + 1;
        }
        std::array<std::pair<MultiPoly, MultiPoly>, 3> pairs{
            {{V(Var::x1), V(Var::y1)}, {V(Var::x2), V(Var::y2)}, {V(Var::x3), V(Var::y3)}}};
        ok = ok && triple_factor(pairs).degree(Var::X) == 8;
        for (auto [g, k] : std::vector<std::pair<int, long>>{{2, 8}, {2, 12}, {4, 10}})
            ok = ok && check_normalization(SatakeParams::eisenstein(g, k)).pass;
        report(7, ok,
               "spinor degree 2^n (n = 1..3), standard degree 2n+1, triple degree 8; "
               "Eisenstein normalization alpha_0^2 alpha_1..alpha_n = p^{kn-n(n+1)/2}");
    }

    // ---------- criterion 8: Hodge / lifting ----------
    {
        bool ok = true;
        for (long k : {6L, 8L, 10L, 12L}) ok = ok && check_lift_hodge(1, k).pass;
        for (long k : {10L, 12L, 14L}) ok = ok && check_lift_hodge(2, k).pass;
        // the rank-16 tensor list, affine in (k, l), pinned on a grid
        struct Affine {
            long ck, cl, c0;
            long eval(long k, long l) const { return ck * k + cl * l + c0; }
        };
        std::vector<std::pair<Affine, Affine>> display{
            {{0, 0, 0}, {2, 2, -6}},  {{0, 1, -2}, {2, 1, -4}}, {{0, 1, -1}, {2, 1, -5}},
            {{0, 2, -3}, {2, 0, -3}}, {{1, 0, -2}, {1, 2, -4}}, {{1, 1, -4}, {1, 1, -2}},
            {{1, 1, -3}, {1, 1, -3}}, {{1, 2, -5}, {1, 0, -1}}, {{1, 0, -1}, {1, 2, -5}},
            {{1, 1, -3}, {1, 1, -3}}, {{1, 1, -2}, {1, 1, -4}}, {{1, 2, -4}, {1, 0, -2}},
            {{2, 0, -3}, {0, 2, -3}}, {{2, 1, -5}, {0, 1, -1}}, {{2, 1, -4}, {0, 1, -2}},
            {{2, 2, -6}, {0, 0, 0}},
        };
        for (auto [k, l] :
             std::vector<std::pair<long, long>>{{8, 6}, {10, 6}, {12, 8}, {9, 5}, {11, 4}}) {
            HodgeType t = hodge_tensor(hodge_spin(2, k), hodge_spin(2, l));
            std::vector<std::pair<long, long>> expect;
            for (const auto& [p, q] : display) expect.emplace_back(p.eval(k, l), q.eval(k, l));
            std::sort(expect.begin(), expect.end());
            ok = ok && t.pairs == expect && t.rank() == 16;
        }
        report(8, ok,
               "Kuenneth lift check for m x k in {1}x{6,8,10,12} and {2}x{10,12,14}; "
               "genus-2 tensor Hodge type matches the 16-pair list on an affine-pinning grid");
    }

    // ---------- criterion 9: critical values ----------
    {
        std::vector<long> expect;
        for (long s = 12; s <= 19; ++s) expect.push_back(s);
        bool ok = critical_values(gamma_data(GammaKind::spin_n3, {12})) == expect;
        for (auto [k, l] : std::vector<std::pair<long, long>>{{10, 6}, {12, 8}, {9, 7}})
            ok = ok && critical_values(gamma_data(GammaKind::tensor_g2, {k, l})).empty();
        for (auto w : std::vector<std::vector<long>>{{12, 10, 8}, {10, 10, 10}, {16, 12, 8}}) {
            std::vector<long> e;
            for (long s = w[0]; s <= w[1] + w[2] - 2; ++s) e.push_back(s);
            ok = ok && critical_values(gamma_data(GammaKind::triple, w)) == e;
        }
        report(9, ok,
               "critical values: spin3(k=12) = {12..19}, tensor-g2 empty, "
               "triple = {k1..k2+k3-2} on three balanced samples");
    }

    // ---------- criterion 10: gamma numerics ----------
    {
        GammaNumericReport dup = check_duplication(100, 1e-10);
        const double pi = std::acos(-1.0);
        double err = std::abs(gamma_C({1.0, 0.0}) - std::complex<double>(1.0 / pi, 0.0));
        bool special = err <= 1e-12 / pi;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "duplication formula on 100 points (max rel err %.2e <= 1e-10); "
                      "Gamma_C(1) = 1/pi to 1e-12",
                      dup.max_rel_err);
        report(10, dup.pass && special, buf);
    }

    // ---------- criterion 11: lifts ----------
    {
        bool ok = true;
        for (int n : {1, 2, 3}) ok = ok && verify_ikeda_standard(n, 10).pass;
        ok = ok && eisenstein_lift_evidence(1, 8).pass && eisenstein_lift_evidence(1, 10).pass &&
             eisenstein_lift_evidence(2, 12).pass;
        for (long k : {6L, 11L}) ok = ok && hecke_quadratic_check(k).pass;
        report(11, ok,
               "standard factorization of the lift for n = 1, 2, 3; Eisenstein evidence for "
               "(m,k) = (1,8), (1,10), (2,12); Hecke quadratic identity");
    }

    // ---------- criterion 12: families and slopes ----------
    {
        mpz_class b;
        mpz_ui_pow_ui(b.get_mpz_t(), 7, 11);
        bool ok = slope_of_quadratic(mpz_class(-16744), b, 7) == Rational(1);
        for (long p : {3L, 5L, 7L})
            ok = ok && eisenstein_family_point(8, p, 10).slope == Rational(0);
        // 20 deterministic random valid Kummer instances
        testutil::Rng rng(2026);
        int done = 0;
        while (done < 20) {
            long p = std::vector<long>{3, 5, 7}[rng.range(0, 2)];
            long m = rng.range(1, 2);
            long step = (p - 1);
            for (long i = 1; i < m; ++i) step *= p;
            long k = rng.range(2, 10);
            long kp = k + step * rng.range(1, 4);
            auto kr = kummer_check(50, k, kp, p, m);
            ok = ok && kr.pass;
            ++done;
        }
        report(12, ok,
               "slope 1 for the p = 7 quadratic with a = -16744, b = 7^11; Eisenstein slopes 0; "
               "20 Kummer congruence instances with n <= 50, p in {3,5,7}");
    }

    // ---------- criterion 13: Dirichlet machinery ----------
    {
        MultiPoly f2 = (one - V(Var::x0) * V(Var::X)) *
                       (one - V(Var::x0) * V(Var::x1) * V(Var::X));
        std::map<long, MultiPoly> factors{{2, f2}};
        for (long q : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L,
                       59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L})
            factors[q] = one - MultiPoly(q) * V(Var::X) + MultiPoly(q * q) * V(Var::X, 2);
        DirichletCoefficients d = dirichlet_from_euler(factors, 256);
        bool recursion = true;
        MultiPoly a02a1 = V(Var::x0, 2) * V(Var::x1);
        for (long pd = 2; pd * 2 <= 256; pd *= 2)
            recursion = recursion && d.at(2 * pd) == d.at(2) * d.at(pd) - a02a1 * d.at(pd / 2);
        bool multiplicative = true;
        for (long h1 = 2; h1 <= 100; ++h1)
            for (long h2 = h1 + 1; h1 * h2 <= 100; ++h2) {
                if (std::gcd(h1, h2) != 1) continue;
                multiplicative = multiplicative && d.at(h1 * h2) == d.at(h1) * d.at(h2);
            }
        report(13, recursion && multiplicative,
               "three-term Hecke recursion for delta <= 8 at p = 2 (symbolic) and "
               "multiplicativity for all coprime h1 h2 <= 100");
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 13 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
