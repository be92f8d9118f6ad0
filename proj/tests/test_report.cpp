#include "doctest.h"

#include <sstream>
#include <vector>

#include "cyclohodge/criteria.hpp"
#include "cyclohodge/lemma_engine.hpp"
#include "cyclohodge/report.hpp"
#include "cyclohodge/scans.hpp"

using namespace cyclohodge;

namespace {

std::string dump(const Report& r) {
    std::ostringstream os;
    emit_json(r, os);
    return os.str();
}

std::vector<std::string> csv_lines(const Report& r) {
    std::ostringstream os;
    emit_csv(r, os);
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(os.str());
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("reports round-trip through JSON") {
    for (const Report& r : {verify_lemma_exhaustive(32), scan_condition_implication(16, 16),
                            scan_grid(12, 16, false, {})}) {
        json j = r.to_json();
        Report back = Report::from_json(json::parse(j.dump()));
        CHECK(back.to_json() == j);
        CHECK(back.to_json().dump(2) == j.dump(2));
    }
}

TEST_CASE("identical runs serialize byte-identically") {
    Report a = verify_lemma_exhaustive(48);
    Report b = verify_lemma_exhaustive(48);
    CHECK(dump(a) == dump(b));

    // Parallel execution does not change the bytes.
    LemmaScanOptions jobs4;
    jobs4.jobs = 4;
    Report c = verify_lemma_exhaustive(48, jobs4);
    c.invocation["jobs"] = 1; // only the echoed parameter differs
    CHECK(dump(a) == dump(c));
}

TEST_CASE("summary consistency is checked") {
    Report r = verify_lemma_exhaustive(16);
    r.check_consistency();
    r.summary.passes += 1;
    CHECK_THROWS_AS(r.check_consistency(), InvariantViolation);
}

TEST_CASE("csv shapes") {
    GridAxis n_axis;
    n_axis.max = 5;
    GridAxis q_axis;
    q_axis.exact = 7;
    Report dims = dims_report(n_axis, q_axis);
    auto lines = csv_lines(dims);
    REQUIRE(lines.size() == 3); // header + n=4 + n=5
    CHECK(lines[0] == "n,q,genus,new_dim,e_dim,half_deg,unitary_dim,ss_lower_bound");
    CHECK(lines[1] == "4,7,9,9,3,3,27,24");
    CHECK(lines[2] == "5,7,12,12,4,3,48,45");
    for (const auto& line : lines) {
        CHECK(std::count(line.begin(), line.end(), ',') == 7); // 8 columns
    }

    // Empty grid: header only.
    GridAxis empty_n;
    empty_n.max = 3;
    Report empty = dims_report(empty_n, q_axis);
    CHECK(csv_lines(empty).size() == 1);

    Report lemma = verify_lemma_exhaustive(8);
    auto lemma_lines = csv_lines(lemma);
    CHECK(lemma_lines[0] == "q,a,b_max,verdict,step,oracle_checked,oracle_agrees");
    REQUIRE(lemma_lines.size() >= 2);
    CHECK(lemma_lines[1] == "5,2,2,constant_forced,p5,true,true");
}

TEST_CASE("timings stay out of the canonical body") {
    Report r = verify_lemma_exhaustive(16);
    std::string without = dump(r);
    r.timings = json{{"wall_ms", 12}};
    std::string with = dump(r);
    CHECK(without != with);
    CHECK(with.find("wall_ms") != std::string::npos);
    CHECK(without.find("wall_ms") == std::string::npos);
    // from_json preserves the optional field.
    Report back = Report::from_json(json::parse(with));
    CHECK(back.timings.has_value());
}

TEST_CASE("unknown subcommands have no csv layout") {
    Report r;
    r.subcommand = "nonsense";
    std::ostringstream os;
    CHECK_THROWS_AS(emit_csv(r, os), InvalidParams);
}
