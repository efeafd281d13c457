#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "loopcut/cutset.hpp"
#include "loopcut/network.hpp"
#include "loopcut/policy.hpp"

namespace loopcut {

/// Raised when no node is eligible on a still-multiply-connected remainder
/// and even the fallback rule finds nothing. Carries the residual graph.
/// Unreachable in practice: a DAG always has a parentless node, which every
/// eligibility rule here admits.
struct no_eligible_node : std::runtime_error {
    Network residual;
    explicit no_eligible_node(Network r)
        : std::runtime_error("no eligible node on a multiply connected remainder"),
          residual(std::move(r)) {}
};

using Eligibility = std::function<bool(const Network&, int)>;

/// A1 candidate rule: at most one parent.
bool eligible_a1(const Network& net, int v);

/// A2 candidate rule: no two parents share a loop through v.
bool eligible_a2(const Network& net, int v);

/// Highest-ranked eligible node under the policy, or nullopt if none is
/// eligible. Expects a loop-reduced graph (pruning already applied).
std::optional<int> select_next(const Network& net, const SelectionPolicy& policy,
                               const Eligibility& eligible);

/// Greedy loop-cutset construction: iterate degree-<=1 pruning (plus, for A2,
/// deletion of nodes on no loop), stop when singly connected, otherwise pick
/// via select_next and remove. Verifies validity of the result against the
/// original network before returning. `variant` must be A1 or A2.
Cutset run_heuristic(const Network& net, Algorithm variant,
                     const SelectionPolicy& policy = {});

/// Baseline from the footnote experiment: after pruning, repeatedly remove a
/// uniformly random A2-eligible node and re-prune until singly connected.
/// Deterministic for a fixed seed.
Cutset run_random_baseline(const Network& net, std::uint64_t seed);

/// Loop-relevant subproblems: nodes on no loop are dropped, then each cyclic
/// biconnected block becomes one sub-network (cut vertices appear in every
/// block containing them). Blocks are ordered by smallest node id. The union
/// of valid per-block cutsets is a valid cutset of the whole network.
std::vector<Network> decompose(const Network& net);

}  // namespace loopcut
