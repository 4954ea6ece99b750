#include "core/series.hpp"

#include "core/errors.hpp"

namespace heckelab {

TruncatedSeries::TruncatedSeries(int order, std::vector<MultiPoly> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const MultiPoly& poly, int order) {
    TruncatedSeries s(order);
    for (const auto& [m, c] : poly.terms()) {
        int k = m.exp(Var::X);
        if (k > order) continue;
        Monomial rest = m;
        rest.e[var_index(Var::X)] = 0;
        s.c_[k] += MultiPoly::term(rest, c);
    }
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::invert() const {
    if (!c_[0].is_one()) fail(errc::not_a_unit, "series inversion requires constant term 1");
    int n = order();
    TruncatedSeries g(n);
    g.c_[0] = MultiPoly(1);
    for (int k = 1; k <= n; ++k) {
        MultiPoly acc;
        for (int j = 1; j <= k; ++j) {
            if (c_[j].is_zero()) continue;
            acc += c_[j] * g.c_[k - j];
        }
        g.c_[k] = -acc;
    }
    return g;
}

bool TruncatedSeries::is_one() const {
    if (!c_[0].is_one()) return false;
    for (int k = 1; k <= order(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

}  // namespace heckelab
