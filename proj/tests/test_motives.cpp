#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "core/errors.hpp"
#include "motives/gamma.hpp"
#include "motives/hodge.hpp"
#include "motives/padic.hpp"

using namespace heckelab;

namespace {
// affine expressions a*k + b*l + c, for symbolic pair bookkeeping in tests
struct Affine {
    long ck = 0, cl = 0, c0 = 0;
    long eval(long k, long l) const { return ck * k + cl * l + c0; }
};
}  // namespace

TEST_CASE("spin hodge types") {
    // n = 2: {(0, 2k-3), (k-2, k-1), (k-1, k-2), (2k-3, 0)}
    for (long k : {4L, 8L, 11L}) {
        HodgeType h = hodge_spin(2, k);
        CHECK(h.weight == 2 * k - 3);
        std::vector<std::pair<long, long>> expect{
            {0, 2 * k - 3}, {k - 2, k - 1}, {k - 1, k - 2}, {2 * k - 3, 0}};
        std::sort(expect.begin(), expect.end());
        CHECK(h.pairs == expect);
    }
    // n = 1: {(0, k-1), (k-1, 0)}
    HodgeType h1 = hodge_spin(1, 12);
    CHECK(h1.pairs == std::vector<std::pair<long, long>>{{0, 11}, {11, 0}});
    // every pair sums to the weight; swap closure
    for (int n : {1, 2, 3, 4}) {
        HodgeType h = hodge_spin(n, 13);
        CHECK(h.rank() == (1L << n));
        long sum_diff = 0;
        for (auto [p, q] : h.pairs) {
            CHECK(p + q == h.weight);
            sum_diff += p - q;
            CHECK(std::count(h.pairs.begin(), h.pairs.end(), std::make_pair(q, p)) >= 1);
        }
        CHECK(sum_diff == 0);
    }
    CHECK_THROWS_AS(hodge_spin(2, 2), Error);
}

TEST_CASE("standard hodge types") {
    HodgeType h = hodge_standard(1, 12);
    std::vector<std::pair<long, long>> expect{{-11, 11}, {0, 0}, {11, -11}};
    CHECK(h.pairs == expect);
    CHECK(h.weight == 0);
    for (int n : {1, 2, 3}) {
        HodgeType hn = hodge_standard(n, 9);
        CHECK(hn.rank() == 2 * n + 1);
        for (auto [p, q] : hn.pairs) CHECK(p + q == 0);
    }
}

TEST_CASE("tensor hodge type matches the rank-16 display") {
    // the sixteen pairs of the genus-2 x genus-2 tensor, affine in (k, l)
    std::vector<std::pair<Affine, Affine>> display{
        {{0, 0, 0}, {2, 2, -6}},   {{0, 1, -2}, {2, 1, -4}},  {{0, 1, -1}, {2, 1, -5}},
        {{0, 2, -3}, {2, 0, -3}},  {{1, 0, -2}, {1, 2, -4}},  {{1, 1, -4}, {1, 1, -2}},
        {{1, 1, -3}, {1, 1, -3}},  {{1, 2, -5}, {1, 0, -1}},  {{1, 0, -1}, {1, 2, -5}},
        {{1, 1, -3}, {1, 1, -3}},  {{1, 1, -2}, {1, 1, -4}},  {{1, 2, -4}, {1, 0, -2}},
        {{2, 0, -3}, {0, 2, -3}},  {{2, 1, -5}, {0, 1, -1}},  {{2, 1, -4}, {0, 1, -2}},
        {{2, 2, -6}, {0, 0, 0}},
    };
    // agreement on a grid of (k, l) with k > l + 1 pins the affine forms
    for (auto [k, l] : std::vector<std::pair<long, long>>{{8, 6}, {10, 6}, {12, 8}, {9, 5}, {11, 4}}) {
        HodgeType t = hodge_tensor(hodge_spin(2, k), hodge_spin(2, l));
        CHECK(t.weight == 2 * k + 2 * l - 6);
        CHECK(t.rank() == 16);
        std::vector<std::pair<long, long>> expect;
        for (const auto& [p, q] : display) expect.emplace_back(p.eval(k, l), q.eval(k, l));
        std::sort(expect.begin(), expect.end());
        CHECK(t.pairs == expect);
        // the middle pair (k+l-3, k+l-3) occurs twice (H_+ and H_-)
        CHECK(std::count(t.pairs.begin(), t.pairs.end(),
                         std::make_pair(k + l - 3, k + l - 3)) == 2);
    }

    // tensor with the rank-1 type {(0,0)} is the identity
    HodgeType unit;
    unit.weight = 0;
    unit.pairs = {{0, 0}};
    HodgeType h = hodge_spin(2, 9);
    CHECK(hodge_tensor(h, unit) == h);
}

TEST_CASE("kuenneth lift check") {
    CHECK(check_lift_hodge(1, 8).pass);
    CHECK(check_lift_hodge(1, 8).rank == 16);
    CHECK(check_lift_hodge(2, 12).pass);
    CHECK(check_lift_hodge(2, 12).rank == 256);
    CHECK_THROWS_AS(check_lift_hodge(1, 4), Error);
    // the grid the conjecture remark covers
    for (int m : {1, 2})
        for (long k = 4 * m + 1; k <= 4 * m + 8; ++k) CHECK(check_lift_hodge(m, k).pass);
}

TEST_CASE("gamma data packages") {
    GammaData g3 = gamma_data(GammaKind::spin_n3, {12});
    CHECK(g3.c_shifts == std::vector<long>{0, 9, 10, 11});
    CHECK(g3.center == 31);
    CHECK(g3.sign == "+1");

    GammaData g4 = gamma_data(GammaKind::spin_n4, {10});
    CHECK(g4.c_shifts == std::vector<long>{0, 6, 7, 8, 9, 13, 14, 15});
    CHECK(g4.center == 31);

    GammaData gt = gamma_data(GammaKind::tensor_g2, {10, 6});
    CHECK(gt.center == 27);
    CHECK(gt.a_plus == 1);
    CHECK(gt.a_minus == 1);
    CHECK(gt.w_half == 13);
    std::vector<long> expect{0, 4, 5, 8, 9, 9, 13, 14};
    CHECK(gt.c_shifts == expect);

    GammaData tr = gamma_data(GammaKind::triple, {12, 10, 8});
    CHECK(tr.c_shifts == std::vector<long>{0, 7, 9, 11});
    CHECK(tr.center == 28);
}

TEST_CASE("critical values") {
    // spin3 at k = 12: {12, ..., 19}
    auto cv = critical_values(gamma_data(GammaKind::spin_n3, {12}));
    std::vector<long> expect;
    for (long s = 12; s <= 19; ++s) expect.push_back(s);
    CHECK(cv == expect);
    // symmetry about center/2
    GammaData g = gamma_data(GammaKind::spin_n3, {14});
    auto cs = critical_values(g);
    for (long s : cs) CHECK(std::count(cs.begin(), cs.end(), g.center - s) == 1);

    // the tensor motive admits none
    for (auto [k, l] : std::vector<std::pair<long, long>>{{10, 6}, {12, 8}, {9, 7}})
        CHECK(critical_values(gamma_data(GammaKind::tensor_g2, {k, l})).empty());

    // balanced triples: {k1, ..., k2+k3-2}
    for (auto w : std::vector<std::vector<long>>{{12, 10, 8}, {10, 10, 10}, {16, 12, 8}}) {
        auto t = critical_values(gamma_data(GammaKind::triple, w));
        std::vector<long> e;
        for (long s = w[0]; s <= w[1] + w[2] - 2; ++s) e.push_back(s);
        CHECK(t == e);
    }
}

TEST_CASE("gamma numerics") {
    const double pi = std::acos(-1.0);
    // Gamma_C(1) = 1/pi
    std::complex<double> g1 = gamma_C({1.0, 0.0});
    CHECK(std::abs(g1 - std::complex<double>(1.0 / pi, 0.0)) <= 1e-12 / pi);
    // Gamma_R(1) = 1
    CHECK(std::abs(gamma_R({1.0, 0.0}) - 1.0) <= 1e-12);
    // recurrence Gamma(s+1) = s Gamma(s)
    for (int i = 1; i <= 40; ++i) {
        std::complex<double> s{0.3 + 0.2 * i, 0.7 * i / 10.0};
        std::complex<double> lhs = gamma_complex(s + 1.0);
        std::complex<double> rhs = s * gamma_complex(s);
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) <= 1e-10);
    }
    // duplication on 100 samples
    auto rep = check_duplication(100, 1e-10);
    CHECK(rep.pass);
    // poles
    CHECK_THROWS_AS(gamma_complex({0.0, 0.0}), Error);
    CHECK_THROWS_AS(gamma_complex({-3.0, 0.0}), Error);
}

TEST_CASE("admissibility") {
    auto b = padic_admissibility(Rational(0));
    CHECK(b.bounded);
    auto h3 = padic_admissibility(Rational(1));
    CHECK_FALSE(h3.bounded);
    CHECK(h3.h == 3);
    auto h2 = padic_admissibility(Rational(1, 2));
    CHECK(h2.h == 2);
    CHECK_THROWS_AS(padic_admissibility(Rational(-1, 2)), Error);
}
