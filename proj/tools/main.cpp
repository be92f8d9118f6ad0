#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cyclohodge/criteria.hpp"
#include "cyclohodge/lemma_engine.hpp"
#include "cyclohodge/report.hpp"
#include "cyclohodge/scans.hpp"
#include "cyclohodge/version.hpp"

namespace {

using cyclohodge::GridAxis;
using cyclohodge::i64;
using cyclohodge::Report;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
    bool timings = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Write the report to this path instead of stdout");
    cmd->add_flag("--timings", out.timings,
                  "Include wall-clock timings in the report (breaks byte determinism)");
}

int finish(Report report, const OutputOptions& out,
           std::chrono::steady_clock::time_point started) {
    report.check_consistency();
    if (out.timings) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        report.timings = cyclohodge::json{
            {"wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
    }
    cyclohodge::write_report(report, out.format, out.out_path, std::cout);
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exhaustive integer checks for unit-group arithmetic modulo prime powers,\n"
                 "floor-multiplicity step functions, and the even-function constancy decision."};
    app.set_version_flag("--version", cyclohodge::kVersion);
    app.require_subcommand(1);

    // dims
    GridAxis dims_n, dims_q;
    OutputOptions dims_out;
    auto* dims = app.add_subcommand("dims", "Dimension tables for (n, q) cells");
    auto* dims_n_opt = dims->add_option("--n", "Exact degree n (>= 4)");
    auto* dims_nmax_opt = dims->add_option("--n-max", "All n from 4 to this bound");
    auto* dims_q_opt = dims->add_option("--q", "Exact prime-power modulus q");
    auto* dims_qmax_opt = dims->add_option("--q-max", "All prime powers q up to this bound");
    dims_n_opt->excludes(dims_nmax_opt);
    dims_q_opt->excludes(dims_qmax_opt);
    add_output_flags(dims, dims_out);

    // check
    GridAxis check_n, check_q;
    OutputOptions check_out;
    int check_jobs = 1;
    auto* check = app.add_subcommand("check", "Hypothesis flags and coprimality witnesses");
    auto* check_n_opt = check->add_option("--n", "Exact degree n (>= 4)");
    auto* check_nmax_opt = check->add_option("--n-max", "All n from 4 to this bound");
    auto* check_q_opt = check->add_option("--q", "Exact prime-power modulus q");
    auto* check_qmax_opt = check->add_option("--q-max", "All prime powers q up to this bound");
    check_n_opt->excludes(check_nmax_opt);
    check_q_opt->excludes(check_qmax_opt);
    check->add_option("--jobs", check_jobs, "Worker threads for grid scans")->capture_default_str();
    add_output_flags(check, check_out);

    // verify-lemma
    OutputOptions lemma_out;
    i64 lemma_q_max = 0;
    i64 lemma_q = 0;
    i64 lemma_a = 0;
    i64 lemma_oracle_q_max = -1;
    int lemma_jobs = 1;
    bool lemma_inject = false;
    auto* lemma = app.add_subcommand(
        "verify-lemma", "Exhaustive constancy decision for all (q, a) with a outside {1, q-1}");
    auto* lemma_qmax_opt =
        lemma->add_option("--q-max", lemma_q_max, "All prime powers q up to this bound");
    auto* lemma_q_opt = lemma->add_option("--q", lemma_q, "Single modulus (with --a)");
    auto* lemma_a_opt =
        lemma->add_option("--a", lemma_a, "Single unit; emits the full certificate");
    lemma->add_option("--oracle-q-max", lemma_oracle_q_max,
                      "Cross-check the threshold oracle for q up to this bound (default: "
                      "min(q-max, 512))");
    lemma->add_option("--jobs", lemma_jobs, "Worker threads")->capture_default_str();
    lemma->add_flag("--inject-failure", lemma_inject, "")->group(""); // test hook, hidden
    lemma_qmax_opt->excludes(lemma_q_opt);
    lemma_q_opt->needs(lemma_a_opt);
    lemma_a_opt->needs(lemma_q_opt);
    add_output_flags(lemma, lemma_out);

    // scan
    OutputOptions scan_out;
    i64 scan_n_max = 0;
    i64 scan_q_max = 0;
    bool scan_include_greater = false;
    int scan_jobs = 1;
    auto* scan = app.add_subcommand(
        "scan", "Full grid: profile invariants, conditions, separation, dimension identities");
    scan->add_option("--n-max", scan_n_max, "All n from 4 to this bound")->required();
    scan->add_option("--q-max", scan_q_max, "All prime powers q up to this bound")->required();
    scan->add_flag("--include-n-greater-q", scan_include_greater,
                   "Also scan cells with n >= q (default: n < q only)");
    scan->add_option("--jobs", scan_jobs, "Worker threads")->capture_default_str();
    add_output_flags(scan, scan_out);

    // orbits
    OutputOptions orbits_out;
    i64 orbits_q = 0;
    i64 orbits_n = 0;
    auto* orbits = app.add_subcommand(
        "orbits", "Good-pair orbits, CM types, and per-orbit separation for one modulus");
    orbits->add_option("--q", orbits_q, "Prime-power modulus")->required();
    auto* orbits_n_opt =
        orbits->add_option("--n", orbits_n, "Degree n; enables separation witnesses");
    add_output_flags(orbits, orbits_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (dims->parsed()) {
            if (dims_n_opt->count()) dims_n.exact = dims_n_opt->as<i64>();
            if (dims_nmax_opt->count()) dims_n.max = dims_nmax_opt->as<i64>();
            if (dims_q_opt->count()) dims_q.exact = dims_q_opt->as<i64>();
            if (dims_qmax_opt->count()) dims_q.max = dims_qmax_opt->as<i64>();
            return finish(cyclohodge::dims_report(dims_n, dims_q), dims_out, started);
        }
        if (check->parsed()) {
            if (check_n_opt->count()) check_n.exact = check_n_opt->as<i64>();
            if (check_nmax_opt->count()) check_n.max = check_nmax_opt->as<i64>();
            if (check_q_opt->count()) check_q.exact = check_q_opt->as<i64>();
            if (check_qmax_opt->count()) check_q.max = check_qmax_opt->as<i64>();
            cyclohodge::ScanOptions opts;
            opts.jobs = check_jobs;
            return finish(cyclohodge::check_report(check_n, check_q, opts), check_out, started);
        }
        if (lemma->parsed()) {
            cyclohodge::LemmaScanOptions opts;
            opts.oracle_q_max = lemma_oracle_q_max;
            opts.jobs = lemma_jobs;
            opts.inject_failure = lemma_inject;
            if (lemma_q_opt->count()) {
                return finish(cyclohodge::lemma_cell_report(lemma_q, lemma_a, opts), lemma_out,
                              started);
            }
            if (!lemma_qmax_opt->count()) {
                std::cerr << "error: verify-lemma needs --q-max or --q/--a\n";
                return 2;
            }
            return finish(cyclohodge::verify_lemma_exhaustive(lemma_q_max, opts), lemma_out,
                          started);
        }
        if (scan->parsed()) {
            cyclohodge::ScanOptions opts;
            opts.jobs = scan_jobs;
            return finish(cyclohodge::scan_grid(scan_n_max, scan_q_max, scan_include_greater, opts),
                          scan_out, started);
        }
        if (orbits->parsed()) {
            std::optional<i64> n;
            if (orbits_n_opt->count()) {
                n = orbits_n;
            }
            return finish(cyclohodge::orbits_report(orbits_q, n), orbits_out, started);
        }
    } catch (const cyclohodge::InvariantViolation& e) {
        // A failed self-check is a mathematical violation, not a usage error.
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const cyclohodge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
