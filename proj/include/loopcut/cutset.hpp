#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace loopcut {

enum class Algorithm { A1, A2, Random, Exact };

std::string algorithm_name(Algorithm a);

/// One greedy selection step: the node picked, its degree and value count in
/// the reduced graph at selection time, and the nodes pruned away afterwards.
struct TraceEntry {
    int picked = 0;
    int degree = 0;
    int values = 0;
    bool fallback = false;  // pick came from the no-eligible-node fallback
    std::vector<int> pruned;
};

/// A loop cutset with provenance: members in selection order plus the
/// per-selection trace. For Algorithm::Exact the trace is empty, members are
/// sorted ascending and `optimal` reports whether the search completed.
struct Cutset {
    Algorithm algorithm = Algorithm::A1;
    std::vector<int> members;
    std::vector<TraceEntry> trace;
    bool optimal = false;

    std::size_t size() const { return members.size(); }
    bool used_fallback() const;

    nlohmann::ordered_json to_json() const;
    std::string serialize() const;  // compact JSON, byte-stable
};

}  // namespace loopcut
