#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclohodge/hodge_data.hpp"
#include "cyclohodge/report.hpp"
#include "cyclohodge/unit_group.hpp"

namespace cyclohodge {

// Case labels for the constancy decision at a = b_max(a), a != 1, in fixed
// first-match order: trivial a = 1, then p in {2, 3, 5}, then the shape of a
// relative to q.
enum class StepTag {
    none,
    trivial_pm1, // a = 1
    p2,          // p = 2
    p3,          // p = 3
    p5,          // p = 5
    even_or_3a,  // p not in {2,3,5}, a even or 3a >= q
    seven_a,     // p not in {2,3,5}, a odd, 3a < q, 7a >= q
    small_a,     // p not in {2,3,5}, a odd, 7a < q
};

const char* to_string(StepTag tag);
StepTag step_tag_from_string(const std::string& s);

struct MergeEvent {
    enum class Cause { orbit, interval };
    Cause cause;
    // orbit: x is a domain member, y = a*x mod q (before folding).
    // interval: x < y are members of one block; the merge absorbs a block
    // meeting [x, y].
    i64 x = 0;
    i64 y = 0;
    // Blocks merged, identified by their minimum elements at merge time.
    i64 block_a = 0;
    i64 block_b = 0;
};

// Union-find over the members of a coprime half range, with a replayable
// merge log. Blocks are reported sorted by minimum element.
class Partition {
public:
    explicit Partition(HalfRange domain);

    const HalfRange& domain() const { return domain_; }
    i64 block_count() const { return blocks_; }

    // Minimum element of the block containing member x.
    i64 representative(i64 x) const;
    bool same_block(i64 x, i64 y) const;
    // Position of member x in the ascending domain list.
    std::size_t domain_index(i64 x) const;

    // Merges the blocks of x and y, logging the event; returns false (and
    // logs nothing) when they already coincide.
    bool merge(i64 x, i64 y, MergeEvent::Cause cause, i64 cause_x, i64 cause_y);

    std::vector<std::vector<i64>> blocks() const;
    const std::vector<MergeEvent>& merge_log() const { return log_; }

private:
    i64 index_of(i64 x) const;
    i64 find(i64 idx) const;

    HalfRange domain_;
    std::vector<i64> index_lookup_; // value -> index+1, 0 when absent
    mutable std::vector<i64> parent_;
    std::vector<i64> min_of_root_;
    i64 blocks_ = 0;
    std::vector<MergeEvent> log_;
};

// Fixpoint of two inference rules on [1, q/2] coprime to p, starting from
// singletons:
//   (i)  orbit fold: for each member x, merge x with fold(a*x);
//   (ii) interval collapse: a block containing x < y absorbs every block
//        meeting [x, y].
// Rule order is fixed (full orbit sweep, then full interval sweep, repeat),
// so the merge log is reproducible. One final block means every even
// function that is monotone on the half range and invariant under
// multiplication by a must be constant.
Partition collapse_closure(const UnitGroup& g, i64 a);

enum class Verdict { constant_forced, not_forced };

const char* to_string(Verdict v);

// Monotonicity convention for counterexamples. The closure itself is
// direction-agnostic (equal endpoints squeeze the interval either way);
// non_decreasing witnesses are the negated non_increasing ones.
enum class MonotoneDirection { non_increasing, non_decreasing };

const char* to_string(MonotoneDirection dir);

struct LemmaCertificate {
    i64 q = 0;
    i64 a = 0;
    i64 b_max = 0;
    Verdict verdict = Verdict::constant_forced;
    MonotoneDirection direction = MonotoneDirection::non_increasing;
    Partition trace;
    // Present iff not_forced: an even, monotone (per direction),
    // multiplication-invariant, non-constant integer function as
    // (member, value) pairs on the half range, ascending by member.
    std::optional<std::vector<std::pair<i64, i64>>> counterexample;
    StepTag step_tag = StepTag::none; // != none iff a = b_max(a) and a != 1

    json to_json() const;
};

// Full constancy decision for (q, a). For a outside {1, q-1} the expected
// verdict is constant_forced; for a in {1, q-1} with at least two half-range
// members the verdict is not_forced with an explicit counterexample.
LemmaCertificate decide_even_lemma(const UnitGroup& g, i64 a,
                                   MonotoneDirection dir = MonotoneDirection::non_increasing);

// First-match classification; requires a = b_max(a) (PreconditionViolated
// otherwise).
StepTag classify_step(const UnitGroup& g, i64 a);

// Independent decision procedure: true ("constancy forced") iff no t in the
// half range makes the even extension of the indicator of [1, t] a
// non-constant invariant function. O(q^2) per pair; level sets of any
// non-constant monotone invariant function yield such a threshold, so this
// agrees with decide_even_lemma.
bool threshold_oracle(const UnitGroup& g, i64 a);

// h is a residue-indexed table (size q, values at units). True iff
// h(a*x) = h(x) for every unit x.
bool is_theta_invariant(const UnitGroup& g, const std::vector<i64>& h, i64 a);
bool is_theta_invariant(const HodgeProfile& profile, i64 a);

// {a : h(a*x) = h(x) for all units x}, ascending. A subgroup containing
// q-1 whenever h is even.
std::vector<i64> invariance_set(const UnitGroup& g, const std::vector<i64>& h);
std::vector<i64> invariance_set(const HodgeProfile& profile);

// Even extension of a half-range table to a residue-indexed table of size q
// (-1 at non-units). Throws InvalidParams if the pairs do not cover the
// half range exactly.
std::vector<i64> extend_even(const UnitGroup& g,
                             const std::vector<std::pair<i64, i64>>& half_table);

// Property checks used to audit counterexamples, each implemented directly
// against the definitions.
bool table_even(const UnitGroup& g, const std::vector<i64>& h);
bool table_monotone_nonincreasing(const UnitGroup& g, const std::vector<i64>& h);
bool table_monotone(const UnitGroup& g, const std::vector<i64>& h, MonotoneDirection dir);
bool table_nonconstant_on_half(const UnitGroup& g, const std::vector<i64>& h);

struct CertificateAudit {
    bool ok = true;
    std::string detail;
};

// Replays the merge log from singletons, validating each event's guard
// (orbit arithmetic, interval containment, distinct blocks), then checks the
// final state against the verdict and re-checks any counterexample with the
// four property checks above.
CertificateAudit verify_certificate(const UnitGroup& g, const LemmaCertificate& cert);

// Smallest unit x with hquad(x*a) != hquad(x*b), or nullopt. Requires a
// good pair: a != b and a != q - b (BadPair otherwise).
std::optional<i64> separation_witness(const HodgeProfile& profile, i64 a, i64 b);

// Lean scan results shared by the report wrappers and the acceptance suite.
struct SeparationScan {
    i64 pairs_checked = 0;
    std::vector<std::pair<i64, i64>> failures; // good pairs with no witness
};
SeparationScan separation_scan(const HodgeProfile& profile);

// Per-pair report over all ordered good pairs of the profile's modulus.
Report verify_separation(const HodgeProfile& profile);

struct LemmaScanOptions {
    // Cross-check against threshold_oracle for q <= oracle_q_max;
    // -1 means min(q_max, 512).
    i64 oracle_q_max = -1;
    int jobs = 1;
    // Test hook: corrupt the first cell's verdict to exercise the failure
    // path end to end.
    bool inject_failure = false;
};

// For every prime power q <= q_max and every unit a outside {1, q-1}:
// decide_even_lemma must yield constant_forced, the threshold oracle must
// agree (within its bound), and classification at b_max must succeed.
// Violations are report failures with full certificates attached.
Report verify_lemma_exhaustive(i64 q_max, const LemmaScanOptions& opts = {});

// Single-cell report with the full certificate (merge log, counterexample).
// A is allowed to be 1 or q-1; the verdict is then informational and not a
// failure.
Report lemma_cell_report(i64 q, i64 a, const LemmaScanOptions& opts = {});

} // namespace cyclohodge
