#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "core/variables.hpp"

namespace heckelab {

// Exponent vector over the fixed alphabet. Exponents are nonnegative; the
// u-exponent is kept in {0,1} by the rewrite u^2 -> p, applied on every
// multiplication.
struct Monomial {
    std::array<int16_t, kVarCount> e{};

    static Monomial unit() { return Monomial{}; }
    static Monomial var(Var v, int exp = 1);

    int exp(Var v) const { return e[var_index(v)]; }
    bool is_unit() const;
    int total_degree() const;

    Monomial times(const Monomial& o) const;

    // Quotient q with q * o == *this (after u-reduction); nullopt if no such
    // monomial exists.
    std::optional<Monomial> divided_by(const Monomial& o) const;

    // Canonical text form, ascending variable order: "p^2 u x0^3"; "1" for
    // the unit monomial.
    std::string str() const;
    static std::optional<Monomial> parse(const std::string& key);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Lexicographic order, later variables take precedence. The p and u slots
// are compared together through the combined half-integral p-degree
// 2*e(p) + e(u), which the rewrite u^2 -> p preserves; this keeps the order
// compatible with multiplication, which term-by-term division relies on.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (int i = kVarCount - 1; i >= 2; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        int ca = 2 * a.e[0] + a.e[1];
        int cb = 2 * b.e[0] + b.e[1];
        return ca < cb;
    }
};

}  // namespace heckelab
