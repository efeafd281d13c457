#pragma once

#include <vector>

#include "loopcut/network.hpp"

namespace loopcut {

// Underlying undirected view of a Network. Vertices are the dense indices of
// Network::nodes(); edge ids are the indices of Network::arcs(). A simple DAG
// cannot produce parallel undirected edges, so the view is a simple graph.
struct UndirectedView {
    int vertex_count = 0;
    // adj[v] = list of (neighbor vertex, edge id), sorted by construction.
    std::vector<std::vector<std::pair<int, int>>> adj;

    static UndirectedView of(const Network& net);
};

/// Component id per vertex, numbered 0.. in order of lowest contained vertex.
std::vector<int> connected_components(const UndirectedView& g);

int component_count(const UndirectedView& g);

/// bridge[e] = true iff edge e disconnects its component when removed.
std::vector<bool> bridge_edges(const UndirectedView& g);

/// Biconnected components: block id per edge. Bridges form their own
/// single-edge blocks. Ids numbered in discovery order of a deterministic DFS.
std::vector<int> biconnected_components(const UndirectedView& g, int* block_count = nullptr);

/// mask[i] = true iff the node at dense index i lies on some undirected cycle.
std::vector<bool> loop_node_mask(const Network& net);

}  // namespace loopcut
