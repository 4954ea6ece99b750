#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/monomial.hpp"
#include "core/rational.hpp"

namespace heckelab {

// Sparse multivariate polynomial over the fixed alphabet with exact rational
// coefficients. Invariants: no stored zero coefficients; u-exponents already
// reduced via u^2 -> p; term map is canonically ordered.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    MultiPoly() = default;
    MultiPoly(long c) { if (c != 0) terms_[Monomial::unit()] = Rational(c); }
    explicit MultiPoly(const Rational& c) { if (!c.is_zero()) terms_[Monomial::unit()] = c; }

    static MultiPoly variable(Var v, int exp = 1);
    static MultiPoly term(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Single-term test; optionally exposes the term.
    bool is_monomial() const { return terms_.size() == 1; }

    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of an exact monomial (zero if absent).
    Rational coeff(const Monomial& m) const;
    // Leading term under the fixed order; polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading() const;

    int degree(Var v) const;      // -1 for the zero polynomial
    int min_degree(Var v) const;  // 0 for the zero polynomial

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly& scale(const Rational& c);
    MultiPoly& mul_term(const Monomial& m, const Rational& c);
    // this += c * m * o, without building intermediates
    void add_scaled(const Monomial& m, const Rational& c, const MultiPoly& o);

    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Replaces every occurrence of v by value (value may be any polynomial).
    MultiPoly substitute(Var v, const MultiPoly& value) const;

    // Splits into coefficients of v^0, v^1, ...; the returned polynomials do
    // not contain v.
    std::vector<MultiPoly> coefficients_in(Var v) const;

    // Componentwise-minimal monomial over all terms (the monomial content).
    Monomial monomial_content() const;

    std::string str() const;

    // Canonical JSON: object mapping monomial keys to "num/den" strings in
    // monomial order.
    nlohmann::ordered_json to_json() const;
    static MultiPoly from_json(const nlohmann::ordered_json& j);

private:
    TermMap terms_;
    void add_term(const Monomial& m, const Rational& c);
};

// Exact quotient num/den; errc::not_divisible when den does not divide num.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

// Convenience builders.
MultiPoly p_power(int e);
MultiPoly one_minus(const MultiPoly& m);  // 1 - m

}  // namespace heckelab
