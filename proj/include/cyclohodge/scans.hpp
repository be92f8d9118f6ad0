#pragma once

#include <optional>

#include "cyclohodge/report.hpp"

namespace cyclohodge {

// Grid selection shared by the dims/check/scan subcommands: either an exact
// value or everything up to a bound.
struct GridAxis {
    std::optional<i64> exact;
    std::optional<i64> max;
};

// Dimension tables per (n, q) cell; identities re-derived per cell and
// checked (failures would indicate an arithmetic bug, not bad input).
Report dims_report(const GridAxis& n_axis, const GridAxis& q_axis);

// Condition flags + witness per (n, q) cell; forward implication asserted.
Report check_report(const GridAxis& n_axis, const GridAxis& q_axis,
                    const ScanOptions& opts = {});

// Full verification grid: profile invariants, conditions, separation, orbit
// cover agreement, and dimension identities per (n, q) cell.
Report scan_grid(i64 n_max, i64 q_max, bool include_n_greater_q,
                 const ScanOptions& opts = {});

// Orbit structure for one modulus: good-pair orbits, CM-type counts, and
// (when n is given) per-orbit separation witnesses plus the dimension-sum
// identity.
Report orbits_report(i64 q, std::optional<i64> n, i64 cm_list_exponent_limit = 8);

} // namespace cyclohodge
