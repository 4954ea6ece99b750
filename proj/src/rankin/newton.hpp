#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/multipoly.hpp"

namespace heckelab {

// Lower convex hull of (degree, p-valuation) points with slopes and height.
// Valuations are exact rationals (u counts as half a power of p).
struct NewtonPolygon {
    struct SlopeMult {
        Rational slope;
        long multiplicity;
    };

    std::vector<std::pair<long, Rational>> points;    // skipped coefficients omitted
    std::vector<std::pair<long, Rational>> vertices;  // lower hull
    std::vector<SlopeMult> slopes;
    Rational height;  // valuation(last point) - valuation(first point)

    bool slopes_integral() const;

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;  // "degree,valuation" lines
    std::string to_svg() const;  // hull polyline, 40 px per lattice unit
};

// Hull of explicit points (nullopt entries are skipped coefficients).
NewtonPolygon newton_polygon(const std::vector<std::optional<Rational>>& valuations);

// Valuation of a polynomial coefficient: the minimum over its terms of
// p-exponent + u-exponent/2 + sum of declared generator weights.
Rational coefficient_valuation(const MultiPoly& c, const std::map<Var, long>& weights);

// Polygon of a coefficient list under a weight assignment (default: all
// generators weigh 0); an all-zero list reports errc::empty_input.
NewtonPolygon newton_from_coefficients(const std::vector<MultiPoly>& coeffs,
                                       const std::map<Var, long>& weights = {});

}  // namespace heckelab
