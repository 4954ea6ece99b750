#pragma once

#include <array>
#include <optional>
#include <string>

namespace heckelab {

// The fixed, ordered variable alphabet of the polynomial ring.
//
// p        symbolic prime
// u        square root of p (the ring rewrites u^2 -> p)
// x0..x3   Satake variables, first group
// y0..y3   Satake variables, second group
// X        the generating-series / Euler-factor variable
// at       the auxiliary Satake unit (printed "at")
// ak       the weight-family eigenvalue symbol (printed "ak")
// Tx T1x T2x Px   abstract Hecke generators T(p), T1(p^2), T2(p^2), [p],
//                 left tensor factor (also used for plain elements)
// Ty T1y T2y Py   the same generators, right tensor factor
//
// The monomial order is lexicographic with later variables taking
// precedence, i.e. p < u < x0 < ... < X < at < ak < Tx < ... < Py.
enum class Var : int {
    p = 0,
    u,
    x0,
    x1,
    x2,
    x3,
    y0,
    y1,
    y2,
    y3,
    X,
    at,
    ak,
    Tx,
    T1x,
    T2x,
    Px,
    Ty,
    T1y,
    T2y,
    Py,
};

inline constexpr int kVarCount = 21;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

inline constexpr int var_index(Var v) { return static_cast<int>(v); }

}  // namespace heckelab
