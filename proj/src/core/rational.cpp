#include "core/rational.hpp"

#include <ostream>

namespace heckelab {

void Rational::canonicalize() {
    if (v_.get_den() == 0) fail(errc::invalid_input, "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(errc::parse_error, "bad rational literal: '" + s + "'");
    if (q.get_den() == 0) fail(errc::parse_error, "zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(errc::invalid_input, "division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) fail(errc::invalid_input, "0^negative");
        return Rational(0);
    }
    mpz_class n, d;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), ae);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), ae);
    if (e < 0) std::swap(n, d);
    return Rational(n, d);
}

std::string Rational::str() const {
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    if (r.is_integer()) return os << r.num().get_str();
    return os << r.str();
}

long ord_p(const Rational& r, unsigned long p) {
    if (r.is_zero()) fail(errc::zero_input, "ord_p of zero");
    if (p < 2) fail(errc::invalid_input, "ord_p needs p >= 2");
    mpz_class pz(static_cast<long>(p)), tmp;
    long v = 0;
    mpz_class n = r.num();
    while (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(tmp.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
        n = tmp;
        ++v;
    }
    mpz_class d = r.den();
    while (mpz_divisible_p(d.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(tmp.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
        d = tmp;
        --v;
    }
    return v;
}

}  // namespace heckelab
