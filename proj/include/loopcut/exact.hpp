#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "loopcut/cutset.hpp"
#include "loopcut/network.hpp"

namespace loopcut {

// How a node sits on one undirected cycle: both cycle edges outgoing (a local
// source), one in one out, or both incoming (a local sink / head-to-head).
// Instantiating a node cuts exactly the loops on which it is NOT a sink.
enum class LoopRole { source, through, sink };

struct Loop {
    std::vector<int> nodes;       // cyclic order, canonical start/direction
    std::vector<LoopRole> roles;  // roles[i] describes nodes[i]
};

/// Complete list of simple undirected cycles. Oracle use only: exponential in
/// general, bounded by the enumeration cap.
struct LoopCatalog {
    std::vector<Loop> loops;
};

struct cycle_budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultLoopCap = 100000;

/// All simple cycles of the underlying undirected graph, each annotated with
/// per-node edge orientations. Throws cycle_budget_exceeded past `cap`.
LoopCatalog enumerate_loops(const Network& net, std::size_t cap = kDefaultLoopCap);

/// Brute-force validity: every loop must contain a member of C that is not a
/// sink of that loop.
bool is_valid_cutset_oracle(const Network& net, const std::set<int>& cutset,
                            std::size_t cap = kDefaultLoopCap);

/// Vertex-split reduction of (network, candidate cutset). Every node v yields
/// vertices v_in (2*index) and v_out (2*index + 1). Arc (p, v) becomes the
/// undirected edge {p_out, v_in}; the internal edge {v_in, v_out} ties the
/// halves together. A cutset member contributes neither its internal edge nor
/// its out-arc edges, so exactly the loops it cuts disappear while loops on
/// which it is head-to-head survive through v_in.
struct SplitGraph {
    std::size_t vertex_count = 0;  // always 2 * |nodes|
    std::vector<std::pair<int, int>> edges;
};

SplitGraph make_split_graph(const Network& net, const std::set<int>& cutset);

/// Fast validity test: the split graph must be acyclic (a forest). Agrees
/// with is_valid_cutset_oracle on every input.
bool is_valid_cutset(const Network& net, const std::set<int>& cutset);

/// Product of value counts over the cutset: the number of instantiations
/// conditioning enumerates. Saturates at 2^64-1 with the overflow flag set.
struct Weight {
    std::uint64_t value = 1;
    bool overflow = false;

    friend bool operator==(const Weight&, const Weight&) = default;
};

bool weight_less(const Weight& a, const Weight& b);

Weight cutset_weight(const Network& net, const std::set<int>& cutset);

/// Raised when the exact search exhausts its node-expansion budget. Carries
/// the best valid cutset found so far, flagged non-optimal.
struct budget_exceeded : std::runtime_error {
    Cutset best;
    explicit budget_exceeded(Cutset b)
        : std::runtime_error("exact search budget exceeded"), best(std::move(b)) {}
};

constexpr std::uint64_t kDefaultExactBudget = 10'000'000;

/// Minimum-cardinality valid loop cutset. Prunes, splits into connected
/// components, and runs an iterative-deepening branch-and-bound over loop
/// nodes per component. Ties among minimum-size cutsets break by minimum
/// weight, then lexicographic members. Deterministic.
Cutset exact_min_cutset(const Network& net, std::uint64_t budget = kDefaultExactBudget);

}  // namespace loopcut
