#pragma once

// Shared graphs and sampling helpers for the test suites.

#include <set>
#include <vector>

#include "loopcut/generators.hpp"
#include "loopcut/network.hpp"
#include "loopcut/rng.hpp"

namespace fixtures {

using loopcut::Arc;
using loopcut::Network;
using loopcut::NodeDef;

inline std::vector<NodeDef> binary_nodes(std::initializer_list<int> ids) {
    std::vector<NodeDef> out;
    for (int id : ids) out.push_back({id, 2});
    return out;
}

// 1 -> {2,3} -> 4: the canonical single loop.
inline Network diamond() {
    return Network(binary_nodes({1, 2, 3, 4}), {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

inline Network chain3() {
    return Network(binary_nodes({1, 2, 3}), {{1, 2}, {2, 3}});
}

inline Network diamond_with_pendant() {
    return Network(binary_nodes({1, 2, 3, 4, 5}), {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
}

// Two diamonds joined through a degree-2 midpoint node 9 (on no loop).
inline Network double_diamond_bridge() {
    return Network(binary_nodes({1, 2, 3, 4, 5, 6, 7, 8, 9}),
                   {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 9}, {9, 5},
                    {5, 6}, {5, 7}, {6, 8}, {7, 8}});
}

// Two diamonds joined by a direct bridge arc 4 -> 5.
inline Network double_diamond_direct() {
    return Network(binary_nodes({1, 2, 3, 4, 5, 6, 7, 8}),
                   {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5},
                    {5, 6}, {5, 7}, {6, 8}, {7, 8}});
}

// Node 5 has two parents (1 and 3) whose in-arcs live in different
// biconnected components: two triangles sharing only node 5.
inline Network two_triangle_petals() {
    return Network(binary_nodes({1, 2, 3, 4, 5}),
                   {{1, 2}, {1, 5}, {5, 2}, {3, 4}, {3, 5}, {5, 4}});
}

// Two diamonds sharing their source node 4 (a cut vertex on both loops);
// {4} alone is the unique minimum cutset. Node ids chosen so that a
// block-local tie-break would pick {1} in the first block.
inline Network shared_apex_double_diamond() {
    return Network(binary_nodes({1, 2, 3, 4, 5, 6, 7}),
                   {{4, 1}, {4, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

// The "v" join without any loop: 1 -> 3 <- 2.
inline Network collider_only() {
    return Network(binary_nodes({1, 2, 3}), {{1, 3}, {2, 3}});
}

inline std::set<int> loop_node_ids(const Network& net) {
    std::set<int> out;
    for (const NodeDef& n : net.nodes())
        if (loopcut::is_on_some_loop(net, n.id)) out.insert(n.id);
    return out;
}

// All DAGs on nodes 1..n with the forced lower->higher arc direction
// (every subset of the upper-triangle pairs). Exhaustive for n <= 4.
inline std::vector<Network> exhaustive_dags(int n) {
    std::vector<Arc> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<Network> out;
    const std::size_t total = std::size_t{1} << pairs.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (std::size_t{1} << b)) arcs.push_back(pairs[b]);
        std::vector<NodeDef> nodes;
        for (int i = 1; i <= n; ++i) nodes.push_back({i, 2});
        out.emplace_back(std::move(nodes), std::move(arcs));
    }
    return out;
}

// Random small graphs: alternating G1 and G2 draws of 4..max_n nodes.
inline std::vector<Network> sample_networks(int count, int max_n, std::uint64_t seed) {
    std::vector<Network> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::uint64_t s = loopcut::rng::derive_seed(seed, i);
        int n = 4 + static_cast<int>(s % static_cast<std::uint64_t>(max_n - 3));
        if (i % 2 == 0) {
            double p = 0.2 + 0.3 * ((s >> 8) % 100) / 100.0;
            out.push_back(loopcut::gen_g1(n, p, {}, s));
        } else {
            int max_m = n * (n - 1) / 2;
            int m = static_cast<int>((s >> 16) % static_cast<std::uint64_t>(max_m + 1));
            out.push_back(loopcut::gen_g2(n, m, false, {}, s));
        }
    }
    return out;
}

// Subsets of `ids` with size <= k, in deterministic order.
inline std::vector<std::set<int>> subsets_up_to(const std::set<int>& ids, std::size_t k) {
    std::vector<int> v(ids.begin(), ids.end());
    std::vector<std::set<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        out.emplace_back(current.begin(), current.end());
        if (current.size() == k) return;
        for (std::size_t i = start; i < v.size(); ++i) {
            current.push_back(v[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace fixtures
