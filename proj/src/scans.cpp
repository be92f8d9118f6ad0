#include "cyclohodge/scans.hpp"

#include <algorithm>

#include "cyclohodge/criteria.hpp"
#include "cyclohodge/galois_orbits.hpp"
#include "cyclohodge/hodge_data.hpp"
#include "cyclohodge/lemma_engine.hpp"
#include "cyclohodge/parallel.hpp"
#include "cyclohodge/version.hpp"

namespace cyclohodge {

namespace {

std::vector<i64> axis_values(const GridAxis& axis, i64 lo, const char* name) {
    if (axis.exact) {
        return {*axis.exact};
    }
    if (axis.max) {
        std::vector<i64> out;
        for (i64 v = lo; v <= *axis.max; ++v) {
            out.push_back(v);
        }
        return out;
    }
    throw InvalidParams(std::string("missing --") + name + " or --" + name + "-max");
}

std::vector<i64> axis_moduli(const GridAxis& axis) {
    if (axis.exact) {
        UnitGroup g(*axis.exact); // validates prime power
        return {*axis.exact};
    }
    if (axis.max) {
        return prime_powers_upto(*axis.max);
    }
    throw InvalidParams("missing --q or --q-max");
}

// Dimension identities re-derived from scratch for one cell.
bool dims_identities_hold(const DimensionSet& d, const UnitGroup& g) {
    if (2 * d.half_deg != g.phi()) {
        return false;
    }
    if (d.genus != (d.n - 1) * (g.q() - 1) / 2 || d.new_dim != (d.n - 1) * g.phi() / 2) {
        return false;
    }
    if (d.e_dim != d.n - 1) {
        return false;
    }
    if (d.unitary_dim != d.half_deg * d.e_dim * d.e_dim) {
        return false;
    }
    if (d.ss_lower_bound != d.half_deg * (d.e_dim * d.e_dim - 1)) {
        return false;
    }
    // Tower decomposition: the new-part dimensions of p, p^2, ..., p^r sum
    // to the genus at q = p^r.
    i64 sum = 0;
    i64 pk = 1;
    for (i64 i = 1; i <= g.r(); ++i) {
        pk *= g.p();
        sum += new_part_dim(d.n, pk);
    }
    return sum == d.genus;
}

} // namespace

Report dims_report(const GridAxis& n_axis, const GridAxis& q_axis) {
    Report report;
    report.tool_version = kVersion;
    report.subcommand = "dims";
    report.invocation = json::object();
    if (n_axis.exact) report.invocation["n"] = *n_axis.exact;
    if (n_axis.max) report.invocation["n_max"] = *n_axis.max;
    if (q_axis.exact) report.invocation["q"] = *q_axis.exact;
    if (q_axis.max) report.invocation["q_max"] = *q_axis.max;

    for (i64 q : axis_moduli(q_axis)) {
        UnitGroup g(q);
        if (g.q() < 3) {
            continue; // no CM dimension data at q = 2
        }
        for (i64 n : axis_values(n_axis, 4, "n")) {
            if (n < 4 || n % g.p() == 0) {
                continue;
            }
            DimensionSet d = dimension_set(n, g);
            bool ok = dims_identities_hold(d, g);
            report.grid.push_back(json::array({n, q}));
            report.results.push_back(json{{"n", d.n},
                                          {"q", d.q},
                                          {"genus", d.genus},
                                          {"new_dim", d.new_dim},
                                          {"e_dim", d.e_dim},
                                          {"half_deg", d.half_deg},
                                          {"unitary_dim", d.unitary_dim},
                                          {"ss_lower_bound", d.ss_lower_bound},
                                          {"identities_ok", ok}});
            report.summary.cells += 1;
            if (ok) {
                report.summary.passes += 1;
            } else {
                report.summary.failures += 1;
            }
        }
    }
    return report;
}

Report check_report(const GridAxis& n_axis, const GridAxis& q_axis, const ScanOptions& opts) {
    // The bounded form delegates to the implication scan so both share one
    // grid and row layout.
    if (!n_axis.exact && !q_axis.exact) {
        i64 n_max = n_axis.max.value_or(0);
        i64 q_max = q_axis.max.value_or(0);
        return scan_condition_implication(n_max, q_max, opts);
    }
    Report report;
    report.tool_version = kVersion;
    report.subcommand = "check";
    report.invocation = json::object();
    if (n_axis.exact) report.invocation["n"] = *n_axis.exact;
    if (n_axis.max) report.invocation["n_max"] = *n_axis.max;
    if (q_axis.exact) report.invocation["q"] = *q_axis.exact;
    if (q_axis.max) report.invocation["q_max"] = *q_axis.max;

    i64 converse_failures = 0;
    for (i64 q : axis_moduli(q_axis)) {
        UnitGroup g(q);
        for (i64 n : axis_values(n_axis, 4, "n")) {
            if (n < 4 || n % g.p() == 0) {
                continue;
            }
            ConditionReport rep = check_conditions(n, g);
            bool witness_valid = rep.witness ? witness_is_valid(n, g, *rep.witness) : false;
            bool fwd = !rep.any_holds || (rep.witness_exists && witness_valid);
            if (rep.witness_exists && !rep.any_holds) {
                converse_failures += 1;
            }
            report.grid.push_back(json::array({n, q}));
            report.results.push_back(json{{"n", n},
                                          {"q", q},
                                          {"p", g.p()},
                                          {"holds_a", rep.holds_a},
                                          {"holds_b", rep.holds_b},
                                          {"holds_c", rep.holds_c},
                                          {"any_holds", rep.any_holds},
                                          {"witness_exists", rep.witness_exists},
                                          {"witness", rep.witness ? json(*rep.witness) : json(nullptr)},
                                          {"forward_ok", fwd}});
            report.summary.cells += 1;
            if (fwd) {
                report.summary.passes += 1;
            } else {
                report.summary.failures += 1;
            }
        }
    }
    report.summary.info = json{{"converse_failures", converse_failures}};
    return report;
}

Report scan_grid(i64 n_max, i64 q_max, bool include_n_greater_q, const ScanOptions& opts) {
    Report report;
    report.tool_version = kVersion;
    report.subcommand = "scan";
    report.invocation = json{{"n_max", n_max},
                             {"q_max", q_max},
                             {"include_n_greater_q", include_n_greater_q},
                             {"jobs", opts.jobs}};

    struct Cell {
        i64 n, q;
    };
    std::vector<Cell> cells;
    for (i64 q : prime_powers_upto(q_max)) {
        UnitGroup g(q);
        for (i64 n = 4; n <= n_max; ++n) {
            if (n % g.p() == 0) {
                continue;
            }
            if (!include_n_greater_q && n >= q) {
                continue;
            }
            cells.push_back({n, q});
        }
    }

    std::vector<json> rows(cells.size());
    std::vector<char> ok_flags(cells.size(), 1);
    parallel_for(cells.size(), opts.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        UnitGroup g(c.q);
        bool profile_ok = true;
        bool separation_ok = true;
        bool cover_agrees = true;
        std::string profile_error;
        std::optional<HodgeProfile> profile;
        try {
            profile.emplace(c.n, g); // construction re-verifies the tables
        } catch (const InvariantViolation& e) {
            profile_ok = false;
            profile_error = e.what();
        }
        if (profile) {
            SeparationScan sep = separation_scan(*profile);
            OrbitCoverScan cover = orbit_cover_scan(*profile);
            separation_ok = sep.failures.empty();
            cover_agrees = sep.failures.empty() == cover.failures.empty();
        }
        ConditionReport rep = check_conditions(c.n, g);
        bool conditions_ok = !rep.any_holds || rep.witness_exists;
        bool dims_ok = true;
        if (c.q >= 3) {
            dims_ok = dims_identities_hold(dimension_set(c.n, g), g);
        }
        bool ok = profile_ok && conditions_ok && separation_ok && cover_agrees && dims_ok;
        ok_flags[i] = ok ? 1 : 0;
        json row{{"n", c.n},
                 {"q", c.q},
                 {"p", g.p()},
                 {"profile_ok", profile_ok},
                 {"conditions_ok", conditions_ok},
                 {"separation_ok", separation_ok},
                 {"cover_agrees", cover_agrees},
                 {"dims_ok", dims_ok},
                 {"any_holds", rep.any_holds},
                 {"witness_exists", rep.witness_exists}};
        if (!profile_ok) {
            row["profile_error"] = profile_error;
        }
        rows[i] = std::move(row);
    });

    for (std::size_t i = 0; i < cells.size(); ++i) {
        report.grid.push_back(json::array({cells[i].n, cells[i].q}));
        report.results.push_back(std::move(rows[i]));
        report.summary.cells += 1;
        if (ok_flags[i]) {
            report.summary.passes += 1;
        } else {
            report.summary.failures += 1;
        }
    }
    return report;
}

Report orbits_report(i64 q, std::optional<i64> n, i64 cm_list_exponent_limit) {
    UnitGroup g(q);
    Report report;
    report.tool_version = kVersion;
    report.subcommand = "orbits";
    report.invocation = json::object();
    report.invocation["q"] = q;
    if (n) {
        report.invocation["n"] = *n;
    }

    std::optional<HodgeProfile> profile;
    if (n) {
        profile.emplace(*n, g);
    }

    i64 good_pair_count = 0;
    for (i64 c : g.units()) {
        if (c != 1 && c != g.q() - 1) {
            good_pair_count += 1;
        }
    }
    json info{{"phi", g.phi()},
              {"good_pairs", good_pair_count * g.phi()},
              {"good_pair_orbits", good_pair_count}};
    if (g.q() >= 3) {
        CMTypeEnumeration cm = cm_types(g);
        info["cm_type_count_log2"] = cm.count_log2();
        auto count = cm.count();
        info["cm_type_count"] = count ? json(static_cast<i64>(*count)) : json(nullptr);
        if (cm.count_log2() <= cm_list_exponent_limit) {
            json types = json::array();
            for (std::uint64_t i = 0; i < cm.enumerable_count(); ++i) {
                types.push_back(cm.type_at(i));
            }
            info["cm_types"] = std::move(types);
        }
        if (profile) {
            DimensionSet d = dimension_set(*n, g);
            // One summand e_dim^2 - 1 per element of a CM type.
            i64 per_member = d.e_dim * d.e_dim - 1;
            i64 type_size = cm.count_log2();
            info["cm_dimension_sum_ok"] = (type_size * per_member == d.ss_lower_bound);
        }
    }
    report.summary.info = std::move(info);

    for (i64 c : g.units()) {
        if (c == 1 || c == g.q() - 1) {
            continue;
        }
        report.grid.push_back(json::array({1, c}));
        json row{{"q", q},
                 {"n", n ? json(*n) : json(nullptr)},
                 {"rep_a", 1},
                 {"rep_b", c},
                 {"orbit_size", g.phi()}};
        bool ok = true;
        if (profile) {
            std::optional<std::pair<i64, i64>> member;
            for (i64 x : g.units()) {
                i64 xc = g.mul(x, c);
                if (profile->hquad(x) != profile->hquad(xc)) {
                    member = std::make_pair(x, xc);
                    break;
                }
            }
            row["separated"] = member.has_value();
            row["witness_a"] = member ? json(member->first) : json(nullptr);
            row["witness_b"] = member ? json(member->second) : json(nullptr);
            ok = member.has_value();
        } else {
            row["separated"] = nullptr;
            row["witness_a"] = nullptr;
            row["witness_b"] = nullptr;
        }
        report.results.push_back(std::move(row));
        report.summary.cells += 1;
        if (ok) {
            report.summary.passes += 1;
        } else {
            report.summary.failures += 1;
        }
    }
    return report;
}

} // namespace cyclohodge
