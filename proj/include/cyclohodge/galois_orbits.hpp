#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclohodge/hodge_data.hpp"
#include "cyclohodge/report.hpp"
#include "cyclohodge/unit_group.hpp"

namespace cyclohodge {

// q - a, the complex-conjugate unit.
i64 conjugate(const UnitGroup& g, i64 a);

// a != b and a != q - b.
bool is_good_pair(const UnitGroup& g, i64 a, i64 b);

struct PairOrbit {
    i64 q = 0;
    std::pair<i64, i64> representative; // lexicographically least member
    std::vector<std::pair<i64, i64>> members; // sorted, size phi(q)
};

// Orbit of (a, b) under x . (a, b) = (x*a, x*b). Requires a != b.
PairOrbit pair_orbit(const UnitGroup& g, i64 a, i64 b);

// All ordered pairs (a, b) with a != b and a != q - b, lexicographic.
std::vector<std::pair<i64, i64>> good_pairs(const UnitGroup& g);

// Lazy enumeration of the 2^(phi/2) choices of one unit per conjugate pair
// {a, q-a}. The count is always available; materializing types beyond the
// configured exponent bound throws DomainTooLarge.
class CMTypeEnumeration {
public:
    static constexpr i64 kDefaultMaxExponent = 20;

    CMTypeEnumeration(const UnitGroup& g, i64 max_exponent = kDefaultMaxExponent);

    // Conjugate pairs (a, q-a) with a < q-a, ascending by a.
    const std::vector<std::pair<i64, i64>>& pairs() const { return pairs_; }

    i64 count_log2() const { return static_cast<i64>(pairs_.size()); }
    // Exact count when it fits in 64 bits.
    std::optional<std::uint64_t> count() const;

    // Number of enumerable types; throws DomainTooLarge past the bound.
    std::uint64_t enumerable_count() const;

    // Type at the given index: one choice per pair, in pair order. Index
    // bits select small/large starting at the most significant pair.
    std::vector<i64> type_at(std::uint64_t index) const;

private:
    i64 q_;
    i64 max_exponent_;
    std::vector<std::pair<i64, i64>> pairs_;
};

// Requires q >= 3.
CMTypeEnumeration cm_types(const UnitGroup& g,
                           i64 max_exponent = CMTypeEnumeration::kDefaultMaxExponent);

// Lean per-orbit separation check. Good-pair orbits are indexed by their
// representative (1, c) with c outside {1, q-1}; an orbit is covered when
// some member (x, x*c) has hquad(x) != hquad(x*c).
struct OrbitCoverScan {
    i64 orbits_checked = 0;
    std::vector<i64> failures; // orbit labels c with no covering member
};
OrbitCoverScan orbit_cover_scan(const HodgeProfile& profile);

// Report with one row per good-pair orbit, including the covering member.
Report orbit_separation_cover(const HodgeProfile& profile);

} // namespace cyclohodge
