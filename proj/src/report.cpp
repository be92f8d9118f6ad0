#include "cyclohodge/report.hpp"

#include <fstream>
#include <map>
#include <vector>

namespace cyclohodge {

json Report::to_json() const {
    json j;
    j["tool_version"] = tool_version;
    j["subcommand"] = subcommand;
    j["invocation"] = invocation;
    j["grid"] = grid;
    j["results"] = results;
    json s;
    s["cells"] = summary.cells;
    s["passes"] = summary.passes;
    s["failures"] = summary.failures;
    s["overall_status"] = summary.overall_status();
    if (!summary.step_histogram.empty()) {
        s["step_histogram"] = summary.step_histogram;
    }
    if (!summary.info.is_null()) {
        s["info"] = summary.info;
    }
    j["summary"] = std::move(s);
    if (timings) {
        j["timings"] = *timings;
    }
    return j;
}

Report Report::from_json(const json& j) {
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.subcommand = j.at("subcommand").get<std::string>();
    r.invocation = j.at("invocation");
    r.grid = j.at("grid");
    r.results = j.at("results");
    const json& s = j.at("summary");
    r.summary.cells = s.at("cells").get<i64>();
    r.summary.passes = s.at("passes").get<i64>();
    r.summary.failures = s.at("failures").get<i64>();
    if (s.contains("step_histogram")) {
        r.summary.step_histogram = s.at("step_histogram").get<std::map<std::string, i64>>();
    }
    if (s.contains("info")) {
        r.summary.info = s.at("info");
    }
    if (j.contains("timings")) {
        r.timings = j.at("timings");
    }
    return r;
}

void Report::check_consistency() const {
    if (summary.cells != static_cast<i64>(results.size())) {
        throw InvariantViolation("summary cell count does not match results");
    }
    if (summary.passes + summary.failures != summary.cells) {
        throw InvariantViolation("summary pass/fail split does not cover the cells");
    }
    i64 histogram_total = 0;
    for (const auto& [tag, count] : summary.step_histogram) {
        histogram_total += count;
    }
    if (!summary.step_histogram.empty() && histogram_total != summary.cells) {
        throw InvariantViolation("step histogram does not cover the cells");
    }
}

void emit_json(const Report& report, std::ostream& out) {
    out << report.to_json().dump(2) << "\n";
}

namespace {

// Fixed CSV column sets per subcommand; values are pulled from result rows
// by key, with absent/null values rendered empty.
const std::map<std::string, std::vector<std::string>>& csv_columns() {
    static const std::map<std::string, std::vector<std::string>> columns = {
        {"dims",
         {"n", "q", "genus", "new_dim", "e_dim", "half_deg", "unitary_dim", "ss_lower_bound"}},
        {"check",
         {"n", "q", "p", "holds_a", "holds_b", "holds_c", "any_holds", "witness_exists",
          "witness"}},
        {"verify-lemma",
         {"q", "a", "b_max", "verdict", "step", "oracle_checked", "oracle_agrees"}},
        {"verify-separation", {"a", "b", "separated", "witness_x"}},
        {"orbit-cover", {"rep_a", "rep_b", "orbit_size", "separated", "witness_a", "witness_b"}},
        {"scan",
         {"n", "q", "p", "profile_ok", "conditions_ok", "separation_ok", "cover_agrees",
          "dims_ok", "any_holds", "witness_exists"}},
        {"orbits",
         {"q", "n", "rep_a", "rep_b", "orbit_size", "separated", "witness_a", "witness_b"}},
    };
    return columns;
}

std::string csv_cell(const json& row, const std::string& key) {
    if (!row.contains(key) || row.at(key).is_null()) {
        return "";
    }
    const json& v = row.at(key);
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    return v.dump();
}

} // namespace

void emit_csv(const Report& report, std::ostream& out) {
    auto it = csv_columns().find(report.subcommand);
    if (it == csv_columns().end()) {
        throw InvalidParams("no CSV layout for subcommand '" + report.subcommand + "'");
    }
    const auto& cols = it->second;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << "\n";
    for (const json& row : report.results) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            out << (i ? "," : "") << csv_cell(row, cols[i]);
        }
        out << "\n";
    }
}

void write_report(const Report& report, const std::string& format,
                  const std::string& out_path, std::ostream& stdout_stream) {
    auto emit = [&](std::ostream& os) {
        if (format == "csv") {
            emit_csv(report, os);
        } else if (format == "json") {
            emit_json(report, os);
        } else {
            throw InvalidParams("unknown format '" + format + "' (expected json or csv)");
        }
    };
    if (out_path.empty()) {
        emit(stdout_stream);
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw Error("cannot open '" + out_path + "' for writing");
    }
    emit(file);
    file.flush();
    if (!file) {
        throw Error("write failed for '" + out_path + "'");
    }
}

} // namespace cyclohodge
