#include "loopcut/heuristics.hpp"

#include <algorithm>
#include <cassert>

#include "loopcut/exact.hpp"
#include "loopcut/graph_analysis.hpp"
#include "loopcut/rng.hpp"

namespace loopcut {

bool eligible_a1(const Network& net, int v) { return net.parents(v).size() <= 1; }

bool eligible_a2(const Network& net, int v) { return !has_same_loop_parents(net, v); }

namespace {

// true if a ranks strictly better than b
bool better(const Network& net, const SelectionPolicy& policy, int a, int b) {
    const int deg_a = net.underlying_degree(a), deg_b = net.underlying_degree(b);
    const int val_a = net.values_of(a), val_b = net.values_of(b);
    if (policy.weighted) {
        const auto [wd, wv] = *policy.weighted;
        const double sa = wd * deg_a + wv * val_a;
        const double sb = wd * deg_b + wv * val_b;
        if (sa != sb) return sa > sb;
        return a < b;
    }
    if (deg_a != deg_b) return deg_a > deg_b;
    if (val_a != val_b)
        return policy.value_order == SelectionPolicy::ValueOrder::descending ? val_a > val_b
                                                                             : val_a < val_b;
    return a < b;
}

// Step-1 pruning, plus for A2 the deletion of nodes on no loop, iterated to a
// fixpoint. Removal ids append to `removed`.
Network reduce(Network g, Algorithm variant, std::vector<int>* removed) {
    for (;;) {
        std::size_t before = g.node_count();
        g = prune_degree_one(g, removed);
        if (variant == Algorithm::A2 && !g.empty()) {
            auto mask = loop_node_mask(g);
            std::set<int> drop;
            for (std::size_t i = 0; i < mask.size(); ++i)
                if (!mask[i]) drop.insert(g.nodes()[i].id);
            if (!drop.empty()) {
                if (removed) removed->insert(removed->end(), drop.begin(), drop.end());
                g = remove_nodes(g, drop);
            }
        }
        if (g.node_count() == before) return g;
    }
}

// Dead-end fallback: highest-degree node with at least one non-bridge
// outgoing arc (a non-sink on some remaining loop). Such a node exists in any
// multiply connected DAG, but the regular selection never actually dead-ends
// because a parentless node is always eligible.
std::optional<int> fallback_pick(const Network& g, const SelectionPolicy& policy) {
    auto view = UndirectedView::of(g);
    auto bridge = bridge_edges(view);
    std::optional<int> best;
    for (const NodeDef& n : g.nodes()) {
        int idx = g.index_of(n.id);
        bool nonsink_on_loop = false;
        for (const auto& [w, e] : view.adj[idx]) {
            if (bridge[e]) continue;
            int wid = g.nodes()[w].id;
            const auto& cs = g.children(n.id);
            if (std::binary_search(cs.begin(), cs.end(), wid)) {
                nonsink_on_loop = true;
                break;
            }
        }
        if (!nonsink_on_loop) continue;
        if (!best || better(g, policy, n.id, *best)) best = n.id;
    }
    return best;
}

Cutset run_greedy(const Network& net, Algorithm variant, const SelectionPolicy& policy,
                  const Eligibility& eligible) {
    Cutset cs;
    cs.algorithm = variant;

    Network g = reduce(net, variant, nullptr);
    while (!is_singly_connected(g)) {
        std::optional<int> pick = select_next(g, policy, eligible);
        bool fallback = false;
        if (!pick) {
            pick = fallback_pick(g, policy);
            fallback = true;
            if (!pick) throw no_eligible_node(g);
        }
        TraceEntry entry;
        entry.picked = *pick;
        entry.degree = g.underlying_degree(*pick);
        entry.values = g.values_of(*pick);
        entry.fallback = fallback;
        cs.members.push_back(*pick);
        g = remove_nodes(g, {*pick});
        g = reduce(std::move(g), variant, &entry.pruned);
        cs.trace.push_back(std::move(entry));
    }

    if (!is_valid_cutset(net, {cs.members.begin(), cs.members.end()}))
        throw std::logic_error("heuristic produced an invalid cutset (internal bug)");
    return cs;
}

}  // namespace

std::optional<int> select_next(const Network& net, const SelectionPolicy& policy,
                               const Eligibility& eligible) {
    std::optional<int> best;
    for (const NodeDef& n : net.nodes()) {
        if (!eligible(net, n.id)) continue;
        if (!best || better(net, policy, n.id, *best)) best = n.id;
    }
    return best;
}

Cutset run_heuristic(const Network& net, Algorithm variant, const SelectionPolicy& policy) {
    switch (variant) {
        case Algorithm::A1: return run_greedy(net, variant, policy, eligible_a1);
        case Algorithm::A2: return run_greedy(net, variant, policy, eligible_a2);
        default: throw std::invalid_argument("run_heuristic expects A1 or A2");
    }
}

Cutset run_random_baseline(const Network& net, std::uint64_t seed) {
    Cutset cs;
    cs.algorithm = Algorithm::Random;
    rng::Engine eng(seed);

    Network g = prune_degree_one(net);
    while (!is_singly_connected(g)) {
        std::vector<int> candidates;
        for (const NodeDef& n : g.nodes())
            if (eligible_a2(g, n.id)) candidates.push_back(n.id);
        if (candidates.empty()) throw no_eligible_node(g);
        int pick = candidates[rng::uniform_below(eng, candidates.size())];

        TraceEntry entry;
        entry.picked = pick;
        entry.degree = g.underlying_degree(pick);
        entry.values = g.values_of(pick);
        cs.members.push_back(pick);
        g = remove_nodes(g, {pick});
        g = prune_degree_one(g, &entry.pruned);
        cs.trace.push_back(std::move(entry));
    }

    if (!is_valid_cutset(net, {cs.members.begin(), cs.members.end()}))
        throw std::logic_error("random baseline produced an invalid cutset (internal bug)");
    return cs;
}

std::vector<Network> decompose(const Network& net) {
    Network g = prune_degree_one(net);
    if (g.empty()) return {};
    auto mask = loop_node_mask(g);
    std::set<int> drop;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (!mask[i]) drop.insert(g.nodes()[i].id);
    g = remove_nodes(g, drop);
    if (g.empty()) return {};

    auto view = UndirectedView::of(g);
    int block_count = 0;
    auto block_of = biconnected_components(view, &block_count);

    // Vertex sets per block; single-edge blocks are bridges, not loops.
    std::vector<std::set<int>> members(block_count);
    std::vector<int> edges_in_block(block_count, 0);
    const auto& arcs = g.arcs();
    for (std::size_t e = 0; e < arcs.size(); ++e) {
        int b = block_of[e];
        ++edges_in_block[b];
        members[b].insert(arcs[e].first);
        members[b].insert(arcs[e].second);
    }

    std::vector<std::set<int>> cyclic;
    for (int b = 0; b < block_count; ++b)
        if (edges_in_block[b] >= 2) cyclic.push_back(std::move(members[b]));
    std::sort(cyclic.begin(), cyclic.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });

    std::vector<Network> parts;
    for (const auto& vs : cyclic) {
        std::vector<NodeDef> nodes;
        for (const NodeDef& n : g.nodes())
            if (vs.count(n.id)) nodes.push_back(n);
        std::vector<Arc> sub_arcs;
        for (const Arc& a : g.arcs())
            if (vs.count(a.first) && vs.count(a.second)) sub_arcs.push_back(a);
        parts.emplace_back(std::move(nodes), std::move(sub_arcs));
    }
    return parts;
}

}  // namespace loopcut
