#pragma once

#include <cstdint>
#include <vector>

#include "cyclohodge/errors.hpp"

namespace cyclohodge {

using i64 = std::int64_t;

// a * b with an overflow check.
i64 checked_mul(i64 a, i64 b);

// True iff q = p^r for a prime p and r >= 1. Optionally reports p and r.
bool is_prime_power(i64 q, i64* p_out = nullptr, i64* r_out = nullptr);

// All prime powers q with 2 <= q <= q_max, ascending.
std::vector<i64> prime_powers_upto(i64 q_max);

// Integers i with lo <= i <= hi and gcd(i, p) = 1, ascending.
struct HalfRange {
    i64 lo = 0;
    i64 hi = 0;
    std::vector<i64> members;

    bool contains(i64 x) const;
};

// The multiplicative group (Z/qZ)^* of a prime power q = p^r.
//
// Residues are always handled through their canonical representatives:
// integers in [1, q-1] coprime to p. Instances are immutable after
// construction and safe to share across threads.
class UnitGroup {
public:
    explicit UnitGroup(i64 q);

    i64 q() const { return q_; }
    i64 p() const { return p_; }
    i64 r() const { return r_; }
    i64 phi() const { return phi_; }

    bool is_unit(i64 x) const;
    // Throws PreconditionViolated unless x is a canonical unit; returns x.
    i64 check_unit(i64 x) const;
    // Reduce an arbitrary integer into [1, q-1]; the result must be a unit.
    i64 canon(i64 x) const;

    i64 mul(i64 a, i64 b) const;
    i64 inv(i64 a) const;
    i64 order(i64 a) const; // least k >= 1 with a^k = 1
    i64 conj(i64 a) const;  // q - a
    i64 fold(i64 a) const;  // min(a, q - a), the representative in [1, q/2]

    // Canonical unit list {a : 1 <= a <= q-1, gcd(a, p) = 1}, ascending.
    std::vector<i64> units() const;

    // The subgroup <a, -1>, computed by breadth-first closure under
    // multiplication. Sorted ascending; always contains 1 and q-1.
    std::vector<i64> subgroup_pm(i64 a) const;

    // max(<±a> ∩ [1, q/2]). Equals 1 iff <±a> = {1, q-1}.
    i64 b_max(i64 a) const;

    HalfRange range_coprime(i64 x, i64 y) const;
    HalfRange half_range() const; // [1, floor(q/2)]

    // All units u != 1 with u^2 = 1, ascending.
    std::vector<i64> order_two_elements() const;

private:
    i64 q_;
    i64 p_;
    i64 r_;
    i64 phi_;
};

// Factory matching the constructor; validates q and the configured size cap.
UnitGroup make_group(i64 q);

// The cap applied to q: CYCLO_HODGE_MAX_Q from the environment if set,
// otherwise 2^31.
i64 max_q_cap();

} // namespace cyclohodge
