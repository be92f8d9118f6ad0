#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"

#include "cyclohodge/unit_group.hpp"

namespace cyclohodge {

using json = nlohmann::ordered_json;

struct ReportSummary {
    i64 cells = 0;
    i64 passes = 0;
    i64 failures = 0;
    // Per-tag cell counts; empty except for lemma scans.
    std::map<std::string, i64> step_histogram;
    // Informational counters (never failures), e.g. converse statistics.
    json info;

    std::string overall_status() const { return failures == 0 ? "pass" : "fail"; }
};

// Machine-readable scan result. The canonical JSON body is byte-stable for
// identical inputs: fields appear in a fixed order and no timing data is
// included unless explicitly requested (timings live outside the canonical
// body for exactly that reason).
struct Report {
    std::string tool_version;
    std::string subcommand;
    json invocation = json::object();
    json grid = json::array();
    json results = json::array();
    ReportSummary summary;
    std::optional<json> timings; // excluded from determinism guarantees

    json to_json() const;
    static Report from_json(const json& j);

    // Throws InvariantViolation unless summary counts match the cells.
    void check_consistency() const;

    int exit_code() const { return summary.failures == 0 ? 0 : 1; }
};

// Serialized with two-space indentation and a trailing newline.
void emit_json(const Report& report, std::ostream& out);

// One row per result cell, fixed columns per subcommand, header row first.
// Numeric fields as decimal integers, booleans as true/false, absent values
// as empty cells. Rows follow grid order.
void emit_csv(const Report& report, std::ostream& out);

// format is "json" or "csv"; out_path empty means standard output.
// I/O errors are reported with the offending path.
void write_report(const Report& report, const std::string& format,
                  const std::string& out_path, std::ostream& stdout_stream);

// Options shared by grid scans.
struct ScanOptions {
    int jobs = 1;
};

} // namespace cyclohodge
