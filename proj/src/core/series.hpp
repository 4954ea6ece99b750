#pragma once

#include <vector>

#include "core/multipoly.hpp"

namespace heckelab {

// Power series in X truncated at a fixed order N, with polynomial
// coefficients (which must not involve X themselves).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(order + 1) {}
    TruncatedSeries(int order, std::vector<MultiPoly> coeffs);

    // Reads the X-coefficients of a polynomial; degrees beyond the order are
    // discarded.
    static TruncatedSeries from_poly(const MultiPoly& poly, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const MultiPoly& coeff(int k) const { return c_.at(k); }
    MultiPoly& coeff(int k) { return c_.at(k); }
    const std::vector<MultiPoly>& coeffs() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    // Multiplicative inverse up to the order; requires coeff(0) == 1
    // (errc::not_a_unit otherwise).
    TruncatedSeries invert() const;

    bool is_one() const;

private:
    std::vector<MultiPoly> c_;
};

}  // namespace heckelab
