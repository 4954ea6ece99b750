#include "hecke/dirichlet.hpp"

#include "core/errors.hpp"

namespace heckelab {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

const MultiPoly& DirichletCoefficients::at(long h) const {
    auto it = coeff.find(h);
    if (it == coeff.end()) fail(errc::invalid_input, "h out of range");
    return it->second;
}

DirichletCoefficients dirichlet_from_euler(const std::map<long, MultiPoly>& factors, long bound) {
    if (bound < 1) fail(errc::invalid_input, "bound must be >= 1");
    // invert each local factor far enough for p^d <= bound
    std::map<long, std::vector<MultiPoly>> local;
    for (const auto& [prime, factor] : factors) {
        if (!is_prime(prime)) fail(errc::invalid_input, std::to_string(prime) + " is not prime");
        int order = 0;
        for (long q = prime; q <= bound; q *= prime) ++order;
        TruncatedSeries inv = TruncatedSeries::from_poly(factor, order).invert();
        local[prime] = inv.coeffs();
    }

    DirichletCoefficients out;
    out.bound = bound;
    for (long h = 1; h <= bound; ++h) {
        MultiPoly value(1);
        long rest = h;
        for (long d = 2; d * d <= rest && !value.is_zero(); ++d) {
            if (rest % d) continue;
            int e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            auto it = local.find(d);
            if (it == local.end())
                value = MultiPoly();
            else
                value = value * it->second[e];
        }
        if (rest > 1 && !value.is_zero()) {
            auto it = local.find(rest);
            if (it == local.end())
                value = MultiPoly();
            else
                value = value * it->second[1];
        }
        out.coeff[h] = std::move(value);
    }
    return out;
}

}  // namespace heckelab
