#include "lifts/families.hpp"

#include <optional>
#include <sstream>

#include "core/errors.hpp"
#include "rankin/newton.hpp"

namespace heckelab {

mpz_class eisenstein_family_coeff(long n, long k, long p) {
    if (n < 1 || k < 2 || p < 2) fail(errc::invalid_input, "need n >= 1, k >= 2, p >= 2");
    mpz_class sum = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0 || d % p == 0) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(k - 1));
        sum += t;
    }
    return sum;
}

KummerReport kummer_check(long bound, long k, long k_prime, long p, long m) {
    if (k < 2 || k_prime < 2 || m < 1 || p < 2 || bound < 1)
        fail(errc::invalid_input, "bad kummer_check arguments");
    mpz_class modulus_weight;
    mpz_ui_pow_ui(modulus_weight.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(m - 1));
    modulus_weight *= (p - 1);
    if ((mpz_class(k) - k_prime) % modulus_weight != 0)
        fail(errc::congruence_hypothesis_fails,
             "weights are not congruent mod (p-1)p^{m-1} = " + modulus_weight.get_str());
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(m));
    for (long n = 1; n <= bound; ++n) {
        mpz_class d = eisenstein_family_coeff(n, k, p) - eisenstein_family_coeff(n, k_prime, p);
        if (d % modulus != 0)
            return {false, n, "a_" + std::to_string(n) + " differs mod p^" + std::to_string(m)};
    }
    return {true, bound,
            "a_n(k) = a_n(k') mod " + modulus.get_str() + " for all n <= " + std::to_string(bound)};
}

Rational slope_of_quadratic(const mpz_class& a, const mpz_class& b, long p) {
    if (b == 0) fail(errc::zero_input, "quadratic with b = 0 has no second inverse root");
    // Newton polygon of 1 - a X + b X^2: slopes are the valuations of the
    // inverse roots; the slope is the smallest one.
    std::vector<std::optional<Rational>> vals;
    vals.push_back(Rational(0));
    if (a == 0)
        vals.push_back(std::nullopt);
    else
        vals.push_back(Rational(ord_p(Rational(a), static_cast<unsigned long>(p))));
    vals.push_back(Rational(ord_p(Rational(b), static_cast<unsigned long>(p))));
    NewtonPolygon np = newton_polygon(vals);
    Rational best = np.slopes.front().slope;
    for (const auto& s : np.slopes)
        if (s.slope < best) best = s.slope;
    return best;
}

Rational slope_of_value(const Rational& alpha, long p) {
    return Rational(ord_p(alpha, static_cast<unsigned long>(p)));
}

Rational triple_slope(const Rational& s1, const Rational& s2, const Rational& s3) {
    return s1 + s2 + s3;
}

FamilyPoint eisenstein_family_point(long k, long p, long bound) {
    FamilyPoint fp;
    fp.weight = k;
    fp.p = p;
    fp.a.resize(bound + 1);
    for (long n = 1; n <= bound; ++n) fp.a[n] = eisenstein_family_coeff(n, k, p);
    // alpha_p^{(1)}(k) = 1 for the Eisenstein family
    fp.slope = slope_of_value(Rational(1), p);
    return fp;
}

std::string family_table_csv(const std::vector<FamilyPoint>& points) {
    std::ostringstream os;
    os << "n,k,a_n\n";
    for (const auto& fp : points)
        for (size_t n = 1; n < fp.a.size(); ++n)
            os << n << ',' << fp.weight << ',' << fp.a[n].get_str() << '\n';
    return os.str();
}

}  // namespace heckelab
