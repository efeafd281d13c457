#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "loopcut/network.hpp"

namespace loopcut {

struct ValuesAssignment {
    enum class Kind { all_two, uniform_range };

    Kind kind = Kind::all_two;
    int lo = 2;
    int hi = 2;

    static ValuesAssignment all2() { return {}; }
    static ValuesAssignment uniform(int lo, int hi) {
        return {Kind::uniform_range, lo, hi};
    }
};

/// Parameters of one generated-network family. G1: independent arc
/// probability p per node pair. G2: complete DAG reduced to m arcs by random
/// deletion, optionally keeping the underlying graph connected. ADV: the
/// adversarial family, parameterized by segment count k.
struct GenSpec {
    enum class Kind { G1, G2, ADV };

    Kind kind = Kind::G1;
    int n = 0;
    double p = 0.0;                // G1
    int m = 0;                     // G2
    bool keep_connected = false;   // G2
    int k = 2;                     // ADV
    ValuesAssignment values;
    std::uint64_t seed = 0;

    void validate() const;  // throws validation_error
    std::string row_key() const;

    nlohmann::ordered_json to_json() const;
    static GenSpec from_json(const nlohmann::json& j);
};

/// Nodes 1..n; for each pair i < j independently with probability p, arc
/// i -> j. Pairs are visited in lexicographic order, so output is a pure
/// function of (n, p, values, seed).
Network gen_g1(int n, double p, const ValuesAssignment& values, std::uint64_t seed);

/// Start from the complete DAG on 1..n and delete uniformly random arcs until
/// m remain. With keep_connected, a deletion that would disconnect the
/// underlying graph is rejected and another arc is drawn from the remaining
/// candidates of that round.
Network gen_g2(int n, int m, bool keep_connected, const ValuesAssignment& values,
               std::uint64_t seed);

/// Adversarial family: k chained loop segments hanging off a hub V that is
/// guarded by a three-node gadget, so both greedy heuristics must spend one
/// pick per segment plus one on the gadget while {V, guard} cuts everything.
/// Chain ids 1..4k+1, V = 4k+2, guards A,B,C = 4k+3..4k+5. Requires k >= 2.
Network gen_adv(int k);

/// Node ids for the named roles of gen_adv(k).
struct AdvLabels {
    int hub;                       // V
    int guard_a, guard_b, guard_c; // A, B, C
    std::vector<int> mids;         // c_{4i+3}
};
AdvLabels adv_labels(int k);

/// Reassign value counts: all-2, or independent uniform draws from [lo, hi]
/// in ascending node order. Requires lo >= 2 and lo <= hi.
Network assign_values(const Network& net, const ValuesAssignment& values,
                      std::uint64_t seed);

/// Dispatch on spec.kind.
Network generate(const GenSpec& spec);

}  // namespace loopcut
