// Acceptance suite: exhaustive checks at the shipped bounds, one PASS/FAIL
// line per criterion. Returns the number of failed criteria.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cyclohodge/criteria.hpp"
#include "cyclohodge/galois_orbits.hpp"
#include "cyclohodge/hodge_data.hpp"
#include "cyclohodge/lemma_engine.hpp"
#include "cyclohodge/parallel.hpp"
#include "cyclohodge/unit_group.hpp"

using namespace cyclohodge;

namespace {

int g_failures = 0;

void report_line(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d: %-34s %s (%s)\n", index, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: constancy forced everywhere, q <= 2048 ----

i64 lemma_violations(i64 q_max, int jobs, i64* cells_out) {
    const std::vector<i64> moduli = prime_powers_upto(q_max);
    std::atomic<i64> violations{0};
    std::atomic<i64> cells{0};
    parallel_for(moduli.size(), jobs, [&](std::size_t qi) {
        UnitGroup g(moduli[qi]);
        for (i64 a : g.units()) {
            if (a == 1 || a == g.q() - 1) {
                continue;
            }
            cells.fetch_add(1, std::memory_order_relaxed);
            if (decide_even_lemma(g, a).verdict != Verdict::constant_forced) {
                violations.fetch_add(1, std::memory_order_relaxed);
            }
        }
    });
    if (cells_out) {
        *cells_out = cells.load();
    }
    return violations.load();
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    i64 cells = 0;
    i64 violations = lemma_violations(2048, 1, &cells);
    double single = seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    i64 cells8 = 0;
    i64 violations8 = lemma_violations(2048, 8, &cells8);
    double parallel = seconds_since(t1);

    bool pass = violations == 0 && violations8 == 0 && cells == cells8 && single < 300.0;
    std::ostringstream detail;
    detail << cells << " cells, violations=" << violations << ", " << single
           << "s single-thread, " << parallel << "s with 8 jobs";
    report_line(1, "constancy forced, q<=2048", pass, detail.str());
}

// ---- criterion 2: oracle equivalence, q <= 512, all units ----

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<i64> moduli = prime_powers_upto(512);
    std::atomic<i64> disagreements{0};
    std::atomic<i64> cells{0};
    parallel_for(moduli.size(), 1, [&](std::size_t qi) {
        UnitGroup g(moduli[qi]);
        for (i64 a : g.units()) {
            cells.fetch_add(1, std::memory_order_relaxed);
            bool forced = decide_even_lemma(g, a).verdict == Verdict::constant_forced;
            if (threshold_oracle(g, a) != forced) {
                disagreements.fetch_add(1, std::memory_order_relaxed);
            }
        }
    });
    std::ostringstream detail;
    detail << cells.load() << " cells, disagreements=" << disagreements.load() << ", "
           << seconds_since(t0) << "s";
    report_line(2, "oracle equivalence, q<=512", disagreements.load() == 0, detail.str());
}

// ---- criterion 3: pairing identity, evenness, monotonicity ----

void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    i64 violations = 0;
    i64 profiles = 0;
    for (i64 q : prime_powers_upto(512)) {
        UnitGroup g(q);
        for (i64 n = 4; n < q; ++n) {
            if (n % g.p() == 0) {
                continue;
            }
            ++profiles;
            HodgeProfile prof(n, g);
            for (i64 a : g.units()) {
                if (prof.mult(a) + prof.mult(q - a) != n - 1 ||
                    prof.hquad(a) != prof.hquad(q - a)) {
                    ++violations;
                }
            }
            auto half = prof.hquad_on_half_range();
            for (std::size_t i = 1; i < half.size(); ++i) {
                if (half[i - 1] < half[i]) {
                    ++violations;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << profiles << " profiles, violations=" << violations << ", " << seconds_since(t0)
           << "s";
    report_line(3, "pairing/evenness/monotonicity", violations == 0, detail.str());
}

// ---- criterion 4: dimension identities ----

void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    i64 violations = 0;
    i64 cells = 0;
    for (i64 q : prime_powers_upto(512)) {
        UnitGroup g(q);
        for (i64 n = 4; n < q; ++n) {
            if (n % g.p() == 0) {
                continue;
            }
            ++cells;
            DimensionSet d = dimension_set(n, g);
            bool ok = d.genus == (n - 1) * (q - 1) / 2 && d.new_dim == (n - 1) * g.phi() / 2 &&
                      d.unitary_dim == (g.phi() / 2) * (n - 1) * (n - 1) &&
                      d.ss_lower_bound == (g.phi() / 2) * ((n - 1) * (n - 1) - 1);
            i64 sum = 0;
            i64 pk = 1;
            for (i64 i = 1; i <= g.r(); ++i) {
                pk *= g.p();
                sum += new_part_dim(n, pk);
            }
            ok = ok && sum == d.genus;
            if (!ok) {
                ++violations;
            }
        }
    }
    // Spot values.
    DimensionSet d57 = dimension_set(5, UnitGroup(7));
    if (d57.unitary_dim != 48 || d57.ss_lower_bound != 45) {
        ++violations;
    }
    if (new_part_dim(4, 5) != 6 || new_part_dim(4, 25) != 30 ||
        dimension_set(4, UnitGroup(25)).genus != 36) {
        ++violations;
    }
    std::ostringstream detail;
    detail << cells << " cells, violations=" << violations << ", " << seconds_since(t0) << "s";
    report_line(4, "dimension identities", violations == 0, detail.str());
}

// ---- criterion 5: conditions imply a witness ----

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    i64 failures = 0;
    i64 cells = 0;
    i64 condition_cells = 0;
    i64 witness_without_condition = 0;
    for (i64 q : prime_powers_upto(256)) {
        UnitGroup g(q);
        for (i64 n = 4; n <= 256; ++n) {
            if (n % g.p() == 0) {
                continue;
            }
            ++cells;
            ConditionReport rep = check_conditions(n, g);
            if (rep.any_holds) {
                ++condition_cells;
                if (!rep.witness_exists || !witness_is_valid(n, g, *rep.witness)) {
                    ++failures;
                }
            } else if (rep.witness_exists) {
                ++witness_without_condition;
            }
        }
    }
    std::ostringstream detail;
    detail << cells << " cells, " << condition_cells << " with a condition, failures=" << failures
           << "; converse info: " << witness_without_condition
           << " witnesses without a condition, " << seconds_since(t0) << "s";
    report_line(5, "conditions imply witness", failures == 0, detail.str());
}

// ---- criterion 6: separation and orbit-cover agreement ----

void criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    std::atomic<i64> failures{0};
    std::atomic<i64> profiles{0};
    std::atomic<i64> pairs{0};
    const std::vector<i64> moduli = prime_powers_upto(256);
    parallel_for(moduli.size(), 1, [&](std::size_t qi) {
        UnitGroup g(moduli[qi]);
        for (i64 n = 4; n < g.q(); ++n) {
            if (n % g.p() == 0) {
                continue;
            }
            profiles.fetch_add(1, std::memory_order_relaxed);
            HodgeProfile prof(n, g);
            SeparationScan sep = separation_scan(prof);
            OrbitCoverScan cover = orbit_cover_scan(prof);
            pairs.fetch_add(sep.pairs_checked, std::memory_order_relaxed);
            if (!sep.failures.empty() || !cover.failures.empty()) {
                failures.fetch_add(1, std::memory_order_relaxed);
            }
            if (sep.failures.empty() != cover.failures.empty()) {
                failures.fetch_add(1, std::memory_order_relaxed);
            }
        }
    });
    std::ostringstream detail;
    detail << profiles.load() << " profiles, " << pairs.load()
           << " good pairs, failures=" << failures.load() << ", " << seconds_since(t0) << "s";
    report_line(6, "separation + orbit cover", failures.load() == 0, detail.str());
}

// ---- criterion 7: structural checks on maximal elements ----

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    i64 violations = 0;

    for (i64 q = 8; q <= 1024; q *= 2) {
        UnitGroup g(q);
        for (i64 a : g.units()) {
            i64 bm = g.b_max(a);
            bool trivial = g.subgroup_pm(a) == std::vector<i64>{1, q - 1};
            if (!trivial && bm != q / 2 - 1) {
                ++violations;
            }
        }
        if (g.order_two_elements() != std::vector<i64>{q / 2 - 1, q / 2 + 1, q - 1}) {
            ++violations;
        }
    }

    // q = 25: the square root of -1 below q/2 is 7, reduction fixes it, and
    // the p = 5 case fires.
    {
        UnitGroup g(25);
        if (g.b_max(7) != 7 || g.mul(7, 7) != 24 ||
            classify_step(g, 7) != StepTag::p5 ||
            decide_even_lemma(g, 7).step_tag != StepTag::p5) {
            ++violations;
        }
    }

    // Maximal elements above 1 satisfy 2a^2 > q, all q <= 4096.
    const std::vector<i64> moduli = prime_powers_upto(4096);
    std::atomic<i64> max_violations{0};
    std::atomic<i64> checked{0};
    parallel_for(moduli.size(), 1, [&](std::size_t qi) {
        UnitGroup g(moduli[qi]);
        for (i64 a : g.units()) {
            if (g.b_max(a) == a && a != 1) {
                checked.fetch_add(1, std::memory_order_relaxed);
                if (2 * a * a <= g.q()) {
                    max_violations.fetch_add(1, std::memory_order_relaxed);
                }
            }
        }
    });
    violations += max_violations.load();

    std::ostringstream detail;
    detail << checked.load() << " maximal elements, violations=" << violations << ", "
           << seconds_since(t0) << "s";
    report_line(7, "step-structure checks", violations == 0, detail.str());
}

// ---- criterion 8: randomized certificate replays ----

// Independent even/monotone/invariant function generator: min-fold along
// x -> fold(a*x) alternated with monotone repair until both fix.
std::vector<i64> stabilized_random_function(const UnitGroup& g, i64 a, std::mt19937& rng) {
    const auto& dom = g.half_range().members;
    std::vector<i64> vals(dom.size());
    std::uniform_int_distribution<i64> step(0, 3);
    i64 acc = 0;
    for (std::size_t i = dom.size(); i-- > 0;) {
        acc += step(rng);
        vals[i] = acc;
    }
    std::vector<std::size_t> image(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
        i64 folded = g.fold(g.mul(a, dom[i]));
        image[i] = static_cast<std::size_t>(
            std::lower_bound(dom.begin(), dom.end(), folded) - dom.begin());
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < dom.size(); ++i) {
            i64 m = std::min(vals[i], vals[image[i]]);
            if (vals[i] != m || vals[image[i]] != m) {
                vals[i] = m;
                vals[image[i]] = m;
                changed = true;
            }
        }
        for (std::size_t i = 1; i < dom.size(); ++i) {
            if (vals[i] > vals[i - 1]) {
                vals[i] = vals[i - 1];
                changed = true;
            }
        }
    }
    return vals;
}

void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(427531);
    const std::vector<i64> moduli = prime_powers_upto(512);
    std::uniform_int_distribution<std::size_t> pick_q(0, moduli.size() - 1);
    i64 failures = 0;
    const int replays = 10000;
    for (int trial = 0; trial < replays; ++trial) {
        UnitGroup g(moduli[pick_q(rng)]);
        auto units = g.units();
        std::uniform_int_distribution<std::size_t> pick_a(0, units.size() - 1);
        i64 a = units[pick_a(rng)];
        LemmaCertificate cert = decide_even_lemma(g, a);
        if (!verify_certificate(g, cert).ok) {
            ++failures;
            continue;
        }
        if (cert.verdict == Verdict::constant_forced) {
            std::vector<i64> vals = stabilized_random_function(g, a, rng);
            if (std::adjacent_find(vals.begin(), vals.end(), std::not_equal_to<>()) !=
                vals.end()) {
                ++failures; // found a non-constant invariant function
            }
        } else {
            std::vector<i64> full = extend_even(g, *cert.counterexample);
            if (!table_even(g, full) || !table_monotone_nonincreasing(g, full) ||
                !is_theta_invariant(g, full, cert.a) || !table_nonconstant_on_half(g, full)) {
                ++failures;
            }
        }
    }
    std::ostringstream detail;
    detail << replays << " replays, failures=" << failures << ", " << seconds_since(t0) << "s";
    report_line(8, "certificate replays", failures == 0, detail.str());
}

// ---- criterion 9: CLI determinism and exit codes ----

int run_cli(const std::string& cli, const std::string& args, const std::string& out_path) {
    std::string cmd = cli + " " + args + " > " + out_path + " 2> /dev/null";
    int status = std::system(cmd.c_str());
    if (status == -1) {
        return -1;
    }
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion_9(const std::string& cli) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> problems;

    int c1 = run_cli(cli, "verify-lemma --q-max 128", "acc_cli_run1.json");
    int c2 = run_cli(cli, "verify-lemma --q-max 128", "acc_cli_run2.json");
    if (c1 != 0 || c2 != 0) {
        problems.push_back("clean run exited nonzero");
    }
    std::string body1 = slurp("acc_cli_run1.json");
    if (body1.empty() || body1 != slurp("acc_cli_run2.json")) {
        problems.push_back("outputs differ between identical runs");
    }

    int injected = run_cli(cli, "verify-lemma --q-max 32 --inject-failure", "acc_cli_inject.json");
    if (injected != 1) {
        problems.push_back("injected violation did not exit 1 (got " + std::to_string(injected) +
                           ")");
    }
    int usage = run_cli(cli, "verify-lemma --q-max not-a-number", "acc_cli_usage.json");
    if (usage != 2) {
        problems.push_back("usage error did not exit 2 (got " + std::to_string(usage) + ")");
    }
    int bad_q = run_cli(cli, "dims --n 5 --q 12", "acc_cli_badq.json");
    if (bad_q != 2) {
        problems.push_back("non-prime-power q did not exit 2 (got " + std::to_string(bad_q) + ")");
    }
    int informational = run_cli(cli, "check --n 11 --q 4", "acc_cli_info.json");
    if (informational != 0) {
        problems.push_back("informational query did not exit 0 (got " +
                           std::to_string(informational) + ")");
    }
    for (const char* f : {"acc_cli_run1.json", "acc_cli_run2.json", "acc_cli_inject.json",
                          "acc_cli_usage.json", "acc_cli_badq.json", "acc_cli_info.json"}) {
        std::remove(f);
    }

    std::ostringstream detail;
    if (problems.empty()) {
        detail << "byte-identical reruns, exit codes 0/1/2, " << seconds_since(t0) << "s";
    } else {
        for (std::size_t i = 0; i < problems.size(); ++i) {
            detail << (i ? "; " : "") << problems[i];
        }
    }
    report_line(9, "CLI determinism + exit codes", problems.empty(), detail.str());
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") {
            cli = argv[i + 1];
        }
    }

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (cli.empty()) {
        report_line(9, "CLI determinism + exit codes", false, "no --cli path given");
    } else {
        criterion_9(cli);
    }

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    }
    return g_failures;
}
