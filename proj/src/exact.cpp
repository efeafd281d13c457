#include "loopcut/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "loopcut/graph_analysis.hpp"
#include "loopcut/heuristics.hpp"

namespace loopcut {

namespace {

// Union-find over split-graph vertices for the forest test.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

LoopRole role_of(int inbound) {
    switch (inbound) {
        case 0: return LoopRole::source;
        case 1: return LoopRole::through;
        default: return LoopRole::sink;
    }
}

}  // namespace

LoopCatalog enumerate_loops(const Network& net, std::size_t cap) {
    LoopCatalog catalog;
    const int n = static_cast<int>(net.node_count());
    auto g = UndirectedView::of(net);

    // Each simple cycle is emitted once: rooted at its smallest vertex s,
    // traversing only vertices > s, in the direction whose second vertex is
    // smaller than its last.
    std::vector<char> in_path(n, 0);
    std::vector<int> path;

    auto has_arc = [&](int from_idx, int to_idx) {
        int from = net.nodes()[from_idx].id, to = net.nodes()[to_idx].id;
        const auto& cs = net.children(from);
        return std::binary_search(cs.begin(), cs.end(), to);
    };

    auto emit = [&]() {
        if (catalog.loops.size() >= cap)
            throw cycle_budget_exceeded("loop enumeration exceeded cap of " +
                                        std::to_string(cap) + " cycles");
        Loop loop;
        const std::size_t len = path.size();
        for (std::size_t i = 0; i < len; ++i) {
            int prev = path[(i + len - 1) % len];
            int cur = path[i];
            int next = path[(i + 1) % len];
            int inbound = static_cast<int>(has_arc(prev, cur)) +
                          static_cast<int>(has_arc(next, cur));
            loop.nodes.push_back(net.nodes()[cur].id);
            loop.roles.push_back(role_of(inbound));
        }
        catalog.loops.push_back(std::move(loop));
    };

    auto extend = [&](auto&& self, int s, int u) -> void {
        for (const auto& [w, e] : g.adj[u]) {
            (void)e;
            if (w == s) {
                if (path.size() >= 3 && path[1] < path.back()) emit();
                continue;
            }
            if (w < s || in_path[w]) continue;
            in_path[w] = 1;
            path.push_back(w);
            self(self, s, w);
            path.pop_back();
            in_path[w] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        in_path[s] = 1;
        path = {s};
        extend(extend, s, s);
        in_path[s] = 0;
    }
    return catalog;
}

bool is_valid_cutset_oracle(const Network& net, const std::set<int>& cutset,
                            std::size_t cap) {
    for (int id : cutset) (void)net.index_of(id);
    LoopCatalog catalog = enumerate_loops(net, cap);
    for (const Loop& loop : catalog.loops) {
        bool cut = false;
        for (std::size_t i = 0; i < loop.nodes.size(); ++i) {
            if (loop.roles[i] != LoopRole::sink && cutset.count(loop.nodes[i])) {
                cut = true;
                break;
            }
        }
        if (!cut) return false;
    }
    return true;
}

SplitGraph make_split_graph(const Network& net, const std::set<int>& cutset) {
    for (int id : cutset) (void)net.index_of(id);
    SplitGraph sg;
    sg.vertex_count = 2 * net.node_count();
    for (const NodeDef& n : net.nodes()) {
        if (cutset.count(n.id)) continue;
        int i = net.index_of(n.id);
        sg.edges.emplace_back(2 * i, 2 * i + 1);  // v_in -- v_out
    }
    for (const Arc& a : net.arcs()) {
        if (cutset.count(a.first)) continue;  // tail's out side is gone
        sg.edges.emplace_back(2 * net.index_of(a.first) + 1, 2 * net.index_of(a.second));
    }
    return sg;
}

bool is_valid_cutset(const Network& net, const std::set<int>& cutset) {
    SplitGraph sg = make_split_graph(net, cutset);
    Dsu dsu(sg.vertex_count);
    for (const auto& [a, b] : sg.edges)
        if (!dsu.unite(a, b)) return false;
    return true;
}

bool weight_less(const Weight& a, const Weight& b) {
    if (a.overflow != b.overflow) return !a.overflow;
    return a.value < b.value;
}

Weight cutset_weight(const Network& net, const std::set<int>& cutset) {
    Weight w;
    for (int id : cutset) {
        const auto v = static_cast<std::uint64_t>(net.values_of(id));
        if (w.value > std::numeric_limits<std::uint64_t>::max() / v) {
            w.value = std::numeric_limits<std::uint64_t>::max();
            w.overflow = true;
            break;
        }
        w.value *= v;
    }
    return w;
}

namespace {

struct expansion_limit_hit {};

// Iterative-deepening branch search over one pruned connected component.
// A partial choice suppresses the out-arcs of chosen nodes; a loop survives
// exactly while every chosen node on it is head-to-head, so branching on the
// non-sink vertices of any surviving cycle is exhaustive. The exclusion set
// makes the branches disjoint, so every minimum-size solution is enumerated
// exactly once.
struct ExactSearcher {
    const Network& net;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    int limit = 0;

    std::vector<char> chosen;    // by dense index
    std::vector<char> excluded;  // by dense index
    std::vector<std::set<int>> solutions;

    ExactSearcher(const Network& n, std::uint64_t b)
        : net(n), budget(b), chosen(n.node_count(), 0), excluded(n.node_count(), 0) {}

    // Deterministic surviving simple cycle, as the list of its non-sink
    // vertices (dense indices, ascending); nullopt when the residual graph is
    // a forest (the current choice is a valid cutset).
    std::optional<std::vector<int>> surviving_cycle_candidates() const {
        const int n = static_cast<int>(net.node_count());
        std::vector<std::vector<int>> adj(n);
        for (const Arc& a : net.arcs()) {
            int t = net.index_of(a.first), h = net.index_of(a.second);
            if (chosen[t]) continue;
            adj[t].push_back(h);
            adj[h].push_back(t);
        }
        for (auto& v : adj) std::sort(v.begin(), v.end());

        std::vector<int> parent(n, -2), depth(n, 0);
        for (int root = 0; root < n; ++root) {
            if (parent[root] != -2) continue;
            parent[root] = -1;
            std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
            std::vector<char> parent_edge_skipped(n, 0);
            while (!stack.empty()) {
                auto& [u, next] = stack.back();
                if (next >= adj[u].size()) {
                    stack.pop_back();
                    continue;
                }
                int w = adj[u][next++];
                if (w == parent[u] && !parent_edge_skipped[u]) {
                    parent_edge_skipped[u] = 1;  // simple graph: one edge to parent
                    continue;
                }
                if (parent[w] == -2) {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    stack.emplace_back(w, 0);
                } else {
                    // back edge u-w closes a cycle through the tree path
                    std::vector<int> cyc;
                    int x = u, y = w;
                    std::vector<int> from_x, from_y;
                    while (depth[x] > depth[y]) {
                        from_x.push_back(x);
                        x = parent[x];
                    }
                    while (depth[y] > depth[x]) {
                        from_y.push_back(y);
                        y = parent[y];
                    }
                    while (x != y) {
                        from_x.push_back(x);
                        from_y.push_back(y);
                        x = parent[x];
                        y = parent[y];
                    }
                    cyc.push_back(x);
                    cyc.insert(cyc.end(), from_x.rbegin(), from_x.rend());
                    cyc.insert(cyc.end(), from_y.begin(), from_y.end());
                    return candidates_of(cyc);
                }
            }
        }
        return std::nullopt;
    }

    std::vector<int> candidates_of(const std::vector<int>& cyc) const {
        std::vector<int> out;
        const std::size_t len = cyc.size();
        for (std::size_t i = 0; i < len; ++i) {
            int prev = cyc[(i + len - 1) % len];
            int cur = cyc[i];
            int next = cyc[(i + 1) % len];
            int cur_id = net.nodes()[cur].id;
            const auto& cs = net.children(cur_id);
            bool out_prev = std::binary_search(cs.begin(), cs.end(), net.nodes()[prev].id);
            bool out_next = std::binary_search(cs.begin(), cs.end(), net.nodes()[next].id);
            if (out_prev || out_next) out.push_back(cur);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void dfs(int size) {
        if (++expansions > budget) throw expansion_limit_hit{};
        auto cands = surviving_cycle_candidates();
        if (!cands) {
            std::set<int> sol;
            for (std::size_t i = 0; i < chosen.size(); ++i)
                if (chosen[i]) sol.insert(net.nodes()[i].id);
            solutions.push_back(std::move(sol));
            return;
        }
        if (size == limit) return;
        std::vector<int> taken;
        for (int v : *cands) {
            if (chosen[v] || excluded[v]) continue;
            chosen[v] = 1;
            dfs(size + 1);
            chosen[v] = 0;
            excluded[v] = 1;
            taken.push_back(v);
        }
        for (int v : taken) excluded[v] = 0;
    }
};

// Minimum cutset of one component; `expansions` accumulates across calls and
// aborts via expansion_limit_hit once it passes `budget`.
std::set<int> solve_component(const Network& comp, std::uint64_t budget,
                              std::uint64_t& expansions, const std::set<int>& incumbent) {
    ExactSearcher searcher(comp, budget);
    searcher.expansions = expansions;
    for (int limit = 0; limit <= static_cast<int>(incumbent.size()); ++limit) {
        searcher.limit = limit;
        searcher.solutions.clear();
        try {
            searcher.dfs(0);
        } catch (const expansion_limit_hit&) {
            expansions = searcher.expansions;
            throw;
        }
        if (!searcher.solutions.empty()) {
            expansions = searcher.expansions;
            const std::set<int>* best = nullptr;
            Weight best_w;
            for (const auto& sol : searcher.solutions) {
                Weight w = cutset_weight(comp, sol);
                if (!best || weight_less(w, best_w) ||
                    (w == best_w && std::lexicographical_compare(sol.begin(), sol.end(),
                                                                 best->begin(), best->end()))) {
                    best = &sol;
                    best_w = w;
                }
            }
            return *best;
        }
    }
    expansions = searcher.expansions;
    return incumbent;  // unreachable: the incumbent itself is found at its size
}

std::vector<Network> connected_parts(const Network& net) {
    auto view = UndirectedView::of(net);
    auto comp = connected_components(view);
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::set<int>> vertex_sets(count);
    for (std::size_t i = 0; i < net.node_count(); ++i)
        vertex_sets[comp[i]].insert(net.nodes()[i].id);
    std::vector<Network> parts;
    for (const auto& vs : vertex_sets) {
        std::vector<NodeDef> nodes;
        for (const NodeDef& n : net.nodes())
            if (vs.count(n.id)) nodes.push_back(n);
        std::vector<Arc> arcs;
        for (const Arc& a : net.arcs())
            if (vs.count(a.first)) arcs.push_back(a);  // head shares the component
        parts.emplace_back(std::move(nodes), std::move(arcs));
    }
    return parts;
}

}  // namespace

Cutset exact_min_cutset(const Network& net, std::uint64_t budget) {
    Cutset result;
    result.algorithm = Algorithm::Exact;
    result.optimal = true;

    Network pruned = prune_degree_one(net);
    if (pruned.empty()) return result;

    // Per-component A2 incumbents: valid upper bounds, and the fallback
    // answer if the expansion budget runs out mid-search.
    std::vector<Network> parts = connected_parts(pruned);
    std::vector<std::set<int>> incumbents;
    incumbents.reserve(parts.size());
    for (const Network& comp : parts) {
        Cutset inc = run_heuristic(comp, Algorithm::A2);
        incumbents.emplace_back(inc.members.begin(), inc.members.end());
    }

    std::uint64_t expansions = 0;
    std::set<int> combined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        try {
            std::set<int> sol = solve_component(parts[i], budget, expansions, incumbents[i]);
            combined.insert(sol.begin(), sol.end());
        } catch (const expansion_limit_hit&) {
            for (std::size_t j = i; j < parts.size(); ++j)
                combined.insert(incumbents[j].begin(), incumbents[j].end());
            Cutset best;
            best.algorithm = Algorithm::Exact;
            best.optimal = false;
            best.members.assign(combined.begin(), combined.end());
            throw budget_exceeded(std::move(best));
        }
    }

    result.members.assign(combined.begin(), combined.end());
    return result;
}

}  // namespace loopcut
