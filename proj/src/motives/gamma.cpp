#include "motives/gamma.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace heckelab {

nlohmann::ordered_json GammaData::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["c_shifts"] = c_shifts;
    j["a_plus"] = a_plus;
    j["a_minus"] = a_minus;
    if (a_plus + a_minus > 0) j["w_half"] = w_half;
    j["center"] = center;
    j["sign"] = sign;
    return j;
}

GammaData gamma_data(GammaKind kind, const std::vector<long>& weights) {
    GammaData g;
    switch (kind) {
        case GammaKind::spin_n3: {
            if (weights.size() != 1) fail(errc::invalid_input, "spin3 takes one weight");
            long k = weights[0];
            if (k < 5) fail(errc::invalid_input, "spin3 needs k >= 5");
            g.c_shifts = {0, k - 3, k - 2, k - 1};
            g.center = 3 * k - 5;
            g.sign = "+1";
            break;
        }
        case GammaKind::spin_n4: {
            if (weights.size() != 1) fail(errc::invalid_input, "spin4 takes one weight");
            long k = weights[0];
            if (k < 6) fail(errc::invalid_input, "spin4 needs k > 5");
            g.c_shifts = {0, k - 4, k - 3, k - 2, k - 1, 2 * k - 7, 2 * k - 6, 2 * k - 5};
            g.center = 4 * k - 9;
            g.sign = "+1";
            break;
        }
        case GammaKind::tensor_g2: {
            if (weights.size() != 2) fail(errc::invalid_input, "tensor takes weights k, l");
            long k = weights[0], l = weights[1];
            if (!(k > l + 1)) fail(errc::invalid_input, "tensor needs k > l + 1");
            if (l < 3) fail(errc::invalid_input, "tensor needs l >= 3");
            g.c_shifts = {0, l - 2, l - 1, k - 2, k - 1, 2 * l - 3, k + l - 3, k + l - 2};
            std::sort(g.c_shifts.begin(), g.c_shifts.end());
            g.center = 2 * k + 2 * l - 5;
            // the Gamma_C(s - k - l + 3) factor is Gamma_R Gamma_R by duplication
            g.a_plus = 1;
            g.a_minus = 1;
            g.w_half = k + l - 3;
            g.sign = "eps(f,g), |eps| = 1";
            break;
        }
        case GammaKind::triple: {
            if (weights.size() != 3) fail(errc::invalid_input, "triple takes weights k1, k2, k3");
            long k1 = weights[0], k2 = weights[1], k3 = weights[2];
            if (!(k1 >= k2 && k2 >= k3 && k3 >= 2))
                fail(errc::invalid_input, "triple needs k1 >= k2 >= k3 >= 2");
            g.c_shifts = {0, k3 - 1, k2 - 1, k1 - 1};
            std::sort(g.c_shifts.begin(), g.c_shifts.end());
            g.center = k1 + k2 + k3 - 2;
            g.sign = "+1";
            break;
        }
    }
    return g;
}

std::vector<long> critical_values(const GammaData& g) {
    if (g.c_shifts.empty()) fail(errc::invalid_input, "no gamma shifts");
    long max_shift = *std::max_element(g.c_shifts.begin(), g.c_shifts.end());
    std::vector<long> out;
    for (long s = max_shift + 1; g.center - s >= max_shift + 1; ++s) out.push_back(s);
    return out;
}

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool near_nonpositive_integer(std::complex<double> s) {
    if (std::abs(s.imag()) > 1e-12) return false;
    double r = s.real();
    return r <= 0.0 && std::abs(r - std::round(r)) < 1e-12;
}

}  // namespace

std::complex<double> gamma_complex(std::complex<double> s) {
    if (near_nonpositive_integer(s))
        fail(errc::pole, "gamma pole at s = " + std::to_string(s.real()));
    if (s.real() < 0.5) {
        // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
        const double pi = std::acos(-1.0);
        return pi / (std::sin(pi * s) * gamma_complex(1.0 - s));
    }
    std::complex<double> z = s - 1.0;
    std::complex<double> a = kLanczos[0];
    std::complex<double> t = z + 7.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
    const double sqrt2pi = 2.5066282746310002;
    return sqrt2pi * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

std::complex<double> gamma_C(std::complex<double> s) {
    const double two_pi = 2.0 * std::acos(-1.0);
    return 2.0 * std::pow(two_pi, -s) * gamma_complex(s);
}

std::complex<double> gamma_R(std::complex<double> s) {
    const double pi = std::acos(-1.0);
    return std::pow(pi, -s / 2.0) * gamma_complex(s / 2.0);
}

GammaNumericReport check_duplication(int samples, double tol) {
    GammaNumericReport rep;
    rep.samples = samples;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        // the line Re(s) = 1/2 plus a sweep of moderate real parts
        std::complex<double> s;
        if (i % 2 == 0)
            s = {0.5, 0.1 + 10.0 * double(i) / double(samples)};
        else
            s = {0.5 + 7.0 * double(i) / double(samples), 0.25};
        std::complex<double> lhs = gamma_C(s);
        std::complex<double> rhs = gamma_R(s) * gamma_R(s + 1.0);
        double rel = std::abs(lhs - rhs) / std::abs(lhs);
        worst = std::max(worst, rel);
    }
    rep.max_rel_err = worst;
    rep.pass = worst <= tol;
    rep.detail = "max relative duplication error " + std::to_string(worst);
    return rep;
}

}  // namespace heckelab
