#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "core/errors.hpp"

namespace heckelab {

// Arbitrary-precision rational number, always canonical:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { canonicalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "n", "n/d", with optional sign.
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long e) const;

    // Canonical form "num/den", e.g. "3/1", "-1/2".
    std::string str() const;
    double to_double() const { return v_.get_d(); }

private:
    void canonicalize();
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// p-adic valuation of a nonzero rational; errc::zero_input on zero.
long ord_p(const Rational& r, unsigned long p);

}  // namespace heckelab
