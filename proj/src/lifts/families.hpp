#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "core/rational.hpp"

namespace heckelab {

// a_n(k) = sum over divisors d | n with (d, p) = 1 of d^{k-1}: the Fourier
// coefficients of the p-deprived Eisenstein family.
mpz_class eisenstein_family_coeff(long n, long k, long p);

struct KummerReport {
    bool pass = false;
    long checked_up_to = 0;
    std::string detail;
};

// a_n(k) = a_n(k') mod p^m for all n <= bound, under the weight congruence
// k = k' mod (p-1) p^{m-1} (errc::congruence_hypothesis_fails otherwise).
KummerReport kummer_check(long bound, long k, long k_prime, long p, long m);

// Slope: the smallest p-adic valuation among the inverse roots of a Hecke
// quadratic 1 - a X + b X^2, read off its Newton polygon; or ord_p of an
// explicit eigenvalue.
Rational slope_of_quadratic(const mpz_class& a, const mpz_class& b, long p);
Rational slope_of_value(const Rational& alpha, long p);
Rational triple_slope(const Rational& s1, const Rational& s2, const Rational& s3);

// One member of the Eisenstein family table.
struct FamilyPoint {
    long weight = 0;
    long p = 0;
    std::vector<mpz_class> a;  // a[n] for 1 <= n <= bound, a[0] unused
    Rational slope;            // 0 for the Eisenstein family
};

FamilyPoint eisenstein_family_point(long k, long p, long bound);

// CSV table "n,k,a_n(k)" for several weights.
std::string family_table_csv(const std::vector<FamilyPoint>& points);

}  // namespace heckelab
