#pragma once

#include <optional>

#include "cyclohodge/report.hpp"
#include "cyclohodge/unit_group.hpp"

namespace cyclohodge {

// Hypothesis flags for a parameter pair (n, q = p^r):
//   A: n = q + 1
//   B: p odd and n != 1 (mod q)
//   C: p = 2, n != 1 (mod q) and n != q - 1 (mod 2q)
// plus the coprimality witness: the smallest unit a with
// gcd(floor(n*a/q), n-1) = 1, when one exists.
struct ConditionReport {
    i64 n = 0;
    i64 q = 0;
    i64 p = 0;
    bool holds_a = false;
    bool holds_b = false;
    bool holds_c = false;
    bool any_holds = false;
    std::optional<i64> witness;
    bool witness_exists = false;
};

ConditionReport check_conditions(i64 n, const UnitGroup& g);

// Exhaustive search over units, smallest first.
std::optional<i64> find_coprime_witness(i64 n, const UnitGroup& g);

// Re-derives the witness predicate from scratch (unit range, coprimality to
// p, gcd of the floor with n-1). Used to audit search results.
bool witness_is_valid(i64 n, const UnitGroup& g, i64 a);

// Scans all (n, q) with 4 <= n <= n_max, q a prime power <= q_max, p not
// dividing n. Asserts the forward implication (A or B or C) => witness
// exists; cells where it fails are failures. The converse direction is
// counted informationally in summary.info and never fails a cell.
Report scan_condition_implication(i64 n_max, i64 q_max, const ScanOptions& opts = {});

} // namespace cyclohodge
