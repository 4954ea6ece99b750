#include "motives/hodge.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace heckelab {

void HodgeType::sort_pairs() { std::sort(pairs.begin(), pairs.end()); }

nlohmann::ordered_json HodgeType::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["weight"] = weight;
    j["rank"] = rank();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [p, q] : pairs) arr.push_back({p, q});
    j["pairs"] = arr;
    return j;
}

HodgeType hodge_spin(int n, long k) {
    if (n < 1) fail(errc::invalid_input, "genus must be positive");
    if (k <= n) fail(errc::weight_too_small, "spin Hodge type needs k > n");
    HodgeType h;
    h.weight = k * n - static_cast<long>(n) * (n + 1) / 2;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        long p = 0;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) p += k - i;
        h.pairs.emplace_back(p, h.weight - p);
    }
    h.sort_pairs();
    return h;
}

HodgeType hodge_standard(int n, long k) {
    if (n < 1) fail(errc::invalid_input, "genus must be positive");
    if (k <= n) fail(errc::weight_too_small, "standard Hodge type needs k > n");
    HodgeType h;
    h.weight = 0;
    h.pairs.emplace_back(0, 0);
    for (int i = 1; i <= n; ++i) {
        h.pairs.emplace_back(-k + i, k - i);
        h.pairs.emplace_back(k - i, -k + i);
    }
    h.sort_pairs();
    return h;
}

HodgeType hodge_tensor(const HodgeType& a, const HodgeType& b) {
    HodgeType h;
    h.weight = a.weight + b.weight;
    for (const auto& [pa, qa] : a.pairs)
        for (const auto& [pb, qb] : b.pairs) h.pairs.emplace_back(pa + pb, qa + qb);
    h.sort_pairs();
    return h;
}

LiftHodgeReport check_lift_hodge(int m, long k) {
    if (m < 1) fail(errc::invalid_input, "m must be positive");
    long l = k - 2 * m;
    if (l <= 2 * m) fail(errc::weight_too_small, "lift comparison needs k > 4m");
    HodgeType tensor = hodge_tensor(hodge_spin(2 * m, k), hodge_spin(2 * m, l));
    HodgeType spin = hodge_spin(4 * m, k);
    if (tensor == spin)
        return {true, spin.rank(), "tensor and lift Hodge types agree"};
    return {false, spin.rank(), "Hodge multisets differ"};
}

}  // namespace heckelab
