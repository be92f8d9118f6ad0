#include "cyclohodge/galois_orbits.hpp"

#include <algorithm>
#include <string>

#include "cyclohodge/version.hpp"

namespace cyclohodge {

i64 conjugate(const UnitGroup& g, i64 a) {
    g.check_unit(a);
    return g.q() - a;
}

bool is_good_pair(const UnitGroup& g, i64 a, i64 b) {
    g.check_unit(a);
    g.check_unit(b);
    return a != b && a != g.conj(b);
}

PairOrbit pair_orbit(const UnitGroup& g, i64 a, i64 b) {
    g.check_unit(a);
    g.check_unit(b);
    if (a == b) {
        throw BadPair("pair_orbit requires a != b");
    }
    PairOrbit orbit;
    orbit.q = g.q();
    for (i64 x : g.units()) {
        orbit.members.emplace_back(g.mul(x, a), g.mul(x, b));
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();
    return orbit;
}

std::vector<std::pair<i64, i64>> good_pairs(const UnitGroup& g) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 a : g.units()) {
        for (i64 b : g.units()) {
            if (a != b && a != g.conj(b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

CMTypeEnumeration::CMTypeEnumeration(const UnitGroup& g, i64 max_exponent)
    : q_(g.q()), max_exponent_(max_exponent) {
    if (g.q() < 3) {
        throw InvalidParams("CM types require q >= 3");
    }
    for (i64 a : g.units()) {
        if (a < g.q() - a) {
            pairs_.emplace_back(a, g.q() - a);
        }
    }
}

std::optional<std::uint64_t> CMTypeEnumeration::count() const {
    if (count_log2() >= 63) {
        return std::nullopt;
    }
    return std::uint64_t{1} << count_log2();
}

std::uint64_t CMTypeEnumeration::enumerable_count() const {
    if (count_log2() > max_exponent_ || count_log2() > 62) {
        throw DomainTooLarge("2^" + std::to_string(count_log2()) +
                             " CM types exceed the enumeration bound 2^" +
                             std::to_string(std::min<i64>(max_exponent_, 62)));
    }
    return std::uint64_t{1} << count_log2();
}

std::vector<i64> CMTypeEnumeration::type_at(std::uint64_t index) const {
    std::uint64_t total = enumerable_count();
    if (index >= total) {
        throw InvalidParams("CM type index out of range");
    }
    std::vector<i64> members;
    members.reserve(pairs_.size());
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
        // Bit for pair j counts down from the most significant position, so
        // index 0 picks every smaller element.
        std::uint64_t bit = (index >> (pairs_.size() - 1 - j)) & 1u;
        members.push_back(bit == 0 ? pairs_[j].first : pairs_[j].second);
    }
    return members;
}

CMTypeEnumeration cm_types(const UnitGroup& g, i64 max_exponent) {
    return CMTypeEnumeration(g, max_exponent);
}

OrbitCoverScan orbit_cover_scan(const HodgeProfile& profile) {
    const UnitGroup& g = profile.group();
    const i64 q = g.q();
    const auto units = g.units();
    const auto& hq = profile.hquad_table();
    OrbitCoverScan scan;
    // Good-pair orbits are labelled by c = a^{-1} b: the orbit of (a, b)
    // under x . (a, b) = (xa, xb) contains exactly one pair of the form
    // (1, c), and goodness means c lies outside {1, q-1}.
    for (i64 c : units) {
        if (c == 1 || c == q - 1) {
            continue;
        }
        scan.orbits_checked += 1;
        bool covered = false;
        for (i64 x : units) {
            if (hq[static_cast<std::size_t>(x)] != hq[static_cast<std::size_t>(x * c % q)]) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            scan.failures.push_back(c);
        }
    }
    return scan;
}

Report orbit_separation_cover(const HodgeProfile& profile) {
    const UnitGroup& g = profile.group();
    Report report;
    report.tool_version = kVersion;
    report.subcommand = "orbit-cover";
    report.invocation = json{{"n", profile.n()}, {"q", g.q()}};
    for (i64 c : g.units()) {
        if (c == 1 || c == g.q() - 1) {
            continue;
        }
        std::optional<std::pair<i64, i64>> member;
        for (i64 x : g.units()) {
            i64 xc = g.mul(x, c);
            if (profile.hquad(x) != profile.hquad(xc)) {
                member = std::make_pair(x, xc);
                break;
            }
        }
        report.grid.push_back(json::array({1, c}));
        json row{{"rep_a", 1},
                 {"rep_b", c},
                 {"orbit_size", g.phi()},
                 {"separated", member.has_value()}};
        if (member) {
            row["witness_a"] = member->first;
            row["witness_b"] = member->second;
        } else {
            row["witness_a"] = nullptr;
            row["witness_b"] = nullptr;
        }
        report.results.push_back(std::move(row));
        report.summary.cells += 1;
        if (member) {
            report.summary.passes += 1;
        } else {
            report.summary.failures += 1;
        }
    }
    return report;
}

} // namespace cyclohodge
