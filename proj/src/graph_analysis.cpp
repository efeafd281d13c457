#include "loopcut/graph_analysis.hpp"

#include <algorithm>

namespace loopcut {

UndirectedView UndirectedView::of(const Network& net) {
    UndirectedView g;
    g.vertex_count = static_cast<int>(net.node_count());
    g.adj.assign(g.vertex_count, {});
    const auto& arcs = net.arcs();
    for (std::size_t e = 0; e < arcs.size(); ++e) {
        int t = net.index_of(arcs[e].first);
        int h = net.index_of(arcs[e].second);
        g.adj[t].emplace_back(h, static_cast<int>(e));
        g.adj[h].emplace_back(t, static_cast<int>(e));
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

std::vector<int> connected_components(const UndirectedView& g) {
    std::vector<int> comp(g.vertex_count, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.adj[u]) {
                (void)e;
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int component_count(const UndirectedView& g) {
    auto comp = connected_components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

namespace {

// Iterative low-link DFS shared by the bridge and block computations.
// visit(edge_id) fires on tree and back edges the first time the edge is
// traversed; close(child_edge_id, is_articulation_cut) fires when a tree
// edge's subtree completes.
struct LowLinkDfs {
    const UndirectedView& g;
    std::vector<int> disc, low;
    int timer = 0;

    explicit LowLinkDfs(const UndirectedView& g_)
        : g(g_), disc(g_.vertex_count, -1), low(g_.vertex_count, 0) {}

    template <typename OnEdge, typename OnTreeEdgeDone>
    void run(OnEdge&& on_edge, OnTreeEdgeDone&& on_done) {
        struct Frame {
            int vertex;
            int via_edge;  // edge used to enter (-1 at roots)
            std::size_t next = 0;
        };
        std::vector<Frame> stack;
        for (int root = 0; root < g.vertex_count; ++root) {
            if (disc[root] != -1) continue;
            stack.push_back({root, -1});
            disc[root] = low[root] = timer++;
            while (!stack.empty()) {
                Frame& f = stack.back();
                int u = f.vertex;
                if (f.next < g.adj[u].size()) {
                    auto [w, e] = g.adj[u][f.next++];
                    if (e == f.via_edge) continue;
                    if (disc[w] == -1) {
                        on_edge(u, w, e, true);
                        disc[w] = low[w] = timer++;
                        stack.push_back({w, e});
                    } else if (disc[w] < disc[u]) {
                        on_edge(u, w, e, false);
                        low[u] = std::min(low[u], disc[w]);
                    }
                } else {
                    stack.pop_back();
                    if (!stack.empty()) {
                        Frame& pf = stack.back();
                        low[pf.vertex] = std::min(low[pf.vertex], low[u]);
                        on_done(pf.vertex, u, f.via_edge);
                    }
                }
            }
        }
    }
};

}  // namespace

std::vector<bool> bridge_edges(const UndirectedView& g) {
    std::size_t edge_count = 0;
    for (const auto& nbrs : g.adj) edge_count += nbrs.size();
    edge_count /= 2;
    std::vector<bool> bridge(edge_count, false);

    LowLinkDfs dfs(g);
    dfs.run([](int, int, int, bool) {},
            [&](int parent, int child, int via_edge) {
                if (dfs.low[child] > dfs.disc[parent]) bridge[via_edge] = true;
            });
    return bridge;
}

std::vector<int> biconnected_components(const UndirectedView& g, int* block_count) {
    std::size_t edge_count = 0;
    for (const auto& nbrs : g.adj) edge_count += nbrs.size();
    edge_count /= 2;
    std::vector<int> block(edge_count, -1);
    std::vector<int> edge_stack;
    int next_block = 0;

    LowLinkDfs dfs(g);
    dfs.run(
        [&](int, int, int e, bool) { edge_stack.push_back(e); },
        [&](int parent, int child, int via_edge) {
            if (dfs.low[child] >= dfs.disc[parent]) {
                // pop the block delimited by the tree edge parent->child
                int id = next_block++;
                while (true) {
                    int e = edge_stack.back();
                    edge_stack.pop_back();
                    block[e] = id;
                    if (e == via_edge) break;
                }
            }
        });
    if (block_count) *block_count = next_block;
    return block;
}

std::vector<bool> loop_node_mask(const Network& net) {
    auto g = UndirectedView::of(net);
    auto bridge = bridge_edges(g);
    std::vector<bool> mask(net.node_count(), false);
    for (int v = 0; v < g.vertex_count; ++v)
        for (const auto& [w, e] : g.adj[v]) {
            (void)w;
            if (!bridge[e]) {
                mask[v] = true;
                break;
            }
        }
    return mask;
}

}  // namespace loopcut
