#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "loopcut/cutset.hpp"
#include "loopcut/exact.hpp"
#include "loopcut/generators.hpp"

namespace loopcut {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct AlgoStats {
    int size = 0;
    Weight weight;
    double wall_ms = 0.0;
    bool fallback = false;
};

/// One benchmark observation: the generated graph's provenance plus
/// per-algorithm outcomes.
struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;  // per-trial derived seed
    int nodes = 0;
    int arcs = 0;
    std::optional<AlgoStats> a1, a2, random_pick;
    std::optional<AlgoStats> exact;
    bool exact_skipped = false;  // post-pruning size above the threshold
    bool exact_optimal = false;
};

/// Aggregated comparison row: how often the heuristics tie and which wins
/// otherwise, plus the per-trial sizes whenever some heuristic missed the
/// optimum (recorded only for trials where exact ran and a heuristic was
/// sub-optimal).
struct SummaryTable {
    std::string row_key;
    std::uint64_t master_seed = 0;
    int trials = 0;
    int equal = 0;
    int a1_smaller = 0;  // A1 < A2
    int a2_smaller = 0;  // A1 > A2

    struct OptEntry {
        int trial;
        int a1;
        int a2;
        int exact;
    };
    std::vector<OptEntry> optimal_comparison;
};

struct ComparisonOptions {
    std::set<Algorithm> algorithms = {Algorithm::A1, Algorithm::A2};
    int exact_threshold = 20;  // run exact only if post-pruning nodes <= this
    std::uint64_t exact_budget = kDefaultExactBudget;
    std::uint64_t master_seed = 0;
    int jobs = 1;
};

struct ComparisonResult {
    SummaryTable table;
    std::vector<TrialRecord> records;
};

/// Generate `trials` networks from per-trial derived seeds, run the requested
/// algorithms, validate every produced cutset, and aggregate. Deterministic
/// given (spec, trials, master seed); trials may run in parallel (`jobs`)
/// with identical results.
ComparisonResult run_comparison(const GenSpec& spec, int trials,
                                const ComparisonOptions& options);

enum class ReportFormat { csv, json };

/// Byte-stable report serialization. CSV columns: trial, seed, n, arcs,
/// a1_size, a2_size, random_size, exact_size, a1_weight, a2_weight,
/// exact_optimal_flag. Absent values are empty cells. Leading comment lines
/// carry the artifact version and master seed.
std::string emit_report(const SummaryTable& table, const std::vector<TrialRecord>& records,
                        ReportFormat format);

}  // namespace loopcut
