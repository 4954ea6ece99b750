#pragma once

#include "core/multipoly.hpp"

namespace heckelab {

// Normalized fraction of polynomials. Normal form: the denominator's leading
// coefficient is +1 and numerator/denominator share no monomial content.
// There is no general gcd reduction; callers that know a common factor use
// reduce_by_factor, which certifies the cancellation through exact division.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(MultiPoly num, MultiPoly den);
    explicit RationalFunction(const MultiPoly& num) : num_(num), den_(1) {}

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const { return den_.is_one(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    // Exact equality as fractions (cross multiplication).
    bool equals(const RationalFunction& f) const;

    // Divides numerator and denominator by a known common factor.
    RationalFunction reduce_by_factor(const MultiPoly& f) const;

    nlohmann::ordered_json to_json() const;
    std::string str() const;

private:
    void normalize();
    MultiPoly num_, den_;
};

}  // namespace heckelab
