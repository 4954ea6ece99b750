#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace heckelab {

// Hodge type of a pure motive: a multiset of bidegrees (p, q) with p+q equal
// to the weight for every pair.
struct HodgeType {
    long weight = 0;
    std::vector<std::pair<long, long>> pairs;  // sorted, with multiplicity

    long rank() const { return static_cast<long>(pairs.size()); }
    bool operator==(const HodgeType& o) const = default;

    void sort_pairs();
    nlohmann::ordered_json to_json() const;
};

// Spinor Hodge type at genus n, weight k (k > n): the 2^n ordered partitions
// (I, J) of {1..n} with p = sum_{i in I} (k - i); weight kn - n(n+1)/2.
HodgeType hodge_spin(int n, long k);

// Standard Hodge type: H^{0,0} + sum_i (H^{-k+i,k-i} + H^{k-i,-k+i}),
// rank 2n+1, weight 0.
HodgeType hodge_standard(int n, long k);

// Pairwise sums; rank multiplies, weights add.
HodgeType hodge_tensor(const HodgeType& a, const HodgeType& b);

struct LiftHodgeReport {
    bool pass = false;
    long rank = 0;
    std::string detail;
};

// Kuenneth comparison for the genus-4m lift: the tensor of the genus-2m spin
// types at weights (k, k-2m) must equal the genus-4m spin type at weight k.
LiftHodgeReport check_lift_hodge(int m, long k);

}  // namespace heckelab
