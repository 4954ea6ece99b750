#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

namespace heckelab {

// Archimedean data of a completed L-function: Gamma_C shifts (a factor
// Gamma_C(s - a) per entry), optional Gamma_R multiplicities at the center
// line, the reflection center s -> center - s and the sign when known.
struct GammaData {
    std::vector<long> c_shifts;  // sorted
    int a_plus = 0, a_minus = 0;  // Gamma_R(s - w/2)^{a+} Gamma_R(s + 1 - w/2)^{a-}
    long w_half = 0;              // only meaningful when a_plus + a_minus > 0
    long center = 0;
    std::string sign;  // "+1", or a symbolic description

    nlohmann::ordered_json to_json() const;
};

enum class GammaKind { spin_n3, spin_n4, tensor_g2, triple };

// The four fully specified archimedean packages:
//   spin_n3  (k):        shifts {0, k-3, k-2, k-1},               center 3k-5
//   spin_n4  (k):        shifts {0, k-4..k-1, 2k-7, 2k-6, 2k-5},  center 4k-9
//   tensor_g2(k, l):     shifts {0, l-2, l-1, k-2, k-1, 2l-3,
//                                k+l-3, k+l-2},                   center 2k+2l-5
//   triple   (k1,k2,k3): shifts {0, k3-1, k2-1, k1-1},            center k1+k2+k3-2
GammaData gamma_data(GammaKind kind, const std::vector<long>& weights);

// Integers s such that no Gamma_C factor has a pole at s or at center - s;
// the Gamma_R multiplicities are recorded but take no part here.
std::vector<long> critical_values(const GammaData& g);

// Numeric gamma machinery (double precision, Lanczos approximation).
std::complex<double> gamma_complex(std::complex<double> s);
std::complex<double> gamma_C(std::complex<double> s);  // 2 (2 pi)^{-s} Gamma(s)
std::complex<double> gamma_R(std::complex<double> s);  // pi^{-s/2} Gamma(s/2)

struct GammaNumericReport {
    bool pass = false;
    double max_rel_err = 0.0;
    int samples = 0;
    std::string detail;
};

// |Gamma_C(s) - Gamma_R(s) Gamma_R(s+1)| / |Gamma_C(s)| <= tol over a sample
// grid on the line Re(s) = 1/2 and a few real points.
GammaNumericReport check_duplication(int samples, double tol);

}  // namespace heckelab
