#pragma once

#include <vector>

#include "core/multipoly.hpp"

namespace heckelab {

// Elements of the abstract local Hecke algebra of a given genus: commuting
// polynomials in T(p), T1(p^2), ..., [p] with coefficients in Q[p]. The
// generator alphabet per genus:
//   genus 1: T, [p]            (T1(p^2) is the scalar operator)
//   genus 2: T, T1, [p]
//   genus 3: T, T1, T2, [p]
// X may appear as the series variable in operator polynomials.
struct HeckeElement {
    int genus = 2;
    MultiPoly poly;

    static HeckeElement make(int genus, MultiPoly poly);
};

// Elements of L_{n,Z} (x) L_{n,Z}: the left factor uses Tx/T1x/Px, the right
// factor Ty/T1y/Py.
struct TensorHeckeElement {
    int genus = 2;
    MultiPoly poly;

    static TensorHeckeElement make(int genus, MultiPoly poly);
};

// Generator variables of one tensor side for a genus.
std::vector<Var> hecke_generator_vars(int genus, bool right_side);

// Support validation (p, X and the per-genus generators only).
bool hecke_support_ok(const MultiPoly& poly, int genus, bool tensor);

// JSON: object keyed by generator-exponent strings ("T^2 T1 [p]^3", tensor
// sides joined by " (x) ", "1" for the unit) with MultiPoly-in-p payloads.
// X must not occur; serialize operator polynomials degree by degree.
nlohmann::ordered_json hecke_element_to_json(const MultiPoly& poly, bool tensor);
MultiPoly hecke_element_from_json(const nlohmann::ordered_json& j, int genus, bool tensor);

}  // namespace heckelab
