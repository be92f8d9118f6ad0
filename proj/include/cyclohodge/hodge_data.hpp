#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclohodge/unit_group.hpp"

namespace cyclohodge {

// floor(n*a/q) for a canonical unit a. Throws InvalidParams if n < 4 or p | n.
i64 multiplicity(i64 n, const UnitGroup& g, i64 a);

// Per-unit tables for a parameter pair (n, q):
//
//   mult(a)  = floor(n*a/q)
//   hquad(a) = (n - 1 - 2*mult(a))^2
//
// hquad is four times the squared deviation of mult(a) from (n-1)/2, kept
// integral so all comparisons are exact. Construction verifies the pairing
// identity mult(a) + mult(q-a) = n-1, evenness hquad(a) = hquad(q-a), and
// that hquad is non-increasing along [1, q/2] coprime to p; any violation
// throws InvariantViolation.
class HodgeProfile {
public:
    HodgeProfile(i64 n, UnitGroup group);

    i64 n() const { return n_; }
    const UnitGroup& group() const { return group_; }

    i64 mult(i64 a) const;
    i64 hquad(i64 a) const;

    // Residue-indexed tables of size q; -1 at non-units.
    const std::vector<i64>& mult_table() const { return mult_; }
    const std::vector<i64>& hquad_table() const { return hquad_; }

    // hquad along the ascending members of [1, q/2] coprime to p.
    std::vector<i64> hquad_on_half_range() const;

private:
    i64 n_;
    UnitGroup group_;
    std::vector<i64> mult_;
    std::vector<i64> hquad_;
};

HodgeProfile build_profile(i64 n, const UnitGroup& g);

// (n-1)*phi(q)/2 for any prime power q >= 2 with p not dividing n.
i64 new_part_dim(i64 n, i64 q);

struct DimensionSet {
    i64 n = 0;
    i64 q = 0;
    i64 genus = 0;          // (n-1)(q-1)/2
    i64 new_dim = 0;        // (n-1)*phi(q)/2
    i64 e_dim = 0;          // n-1
    i64 half_deg = 0;       // phi(q)/2
    i64 unitary_dim = 0;    // half_deg * e_dim^2
    i64 ss_lower_bound = 0; // half_deg * (e_dim^2 - 1)
};

// Requires q >= 3 (the degree-2 field has no half-degree integer data).
DimensionSet dimension_set(i64 n, const UnitGroup& g);

struct ConstancyCheck {
    bool constant = true;
    // Two members of [1, q/2] with differing hquad, when non-constant.
    std::optional<std::pair<i64, i64>> witness;
};

ConstancyCheck is_h_constant(const HodgeProfile& profile);

// Returns (mult(a) - mult(b), (n-1) - mult(a) - mult(b)).
// Contract: 4 * first * second = ±(hquad(a) - hquad(b)), and the product
// vanishes exactly when hquad(a) = hquad(b).
std::pair<i64, i64> h_difference_factored(const HodgeProfile& profile, i64 a, i64 b);

} // namespace cyclohodge
