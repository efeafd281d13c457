#include "loopcut/network.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "loopcut/graph_analysis.hpp"

namespace loopcut {

namespace {

std::string join_ids(const std::vector<int>& ids) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ',';
        os << ids[i];
    }
    return os.str();
}

// Returns a directed cycle as a node sequence (first == last) if one exists.
std::vector<int> find_directed_cycle(const std::vector<NodeDef>& nodes,
                                     const std::vector<std::vector<int>>& children,
                                     const std::unordered_map<int, int>& index) {
    const int n = static_cast<int>(nodes.size());
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on path, 2 done
    for (int root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        std::vector<std::size_t> next(n, 0);
        std::vector<int> path{root};
        state[root] = 1;
        while (!path.empty()) {
            int u = path.back();
            if (next[u] < children[u].size()) {
                int w = index.at(children[u][next[u]++]);
                if (state[w] == 1) {
                    // unwind path back to w
                    std::vector<int> cyc;
                    auto it = std::find(path.begin(), path.end(), w);
                    for (; it != path.end(); ++it) cyc.push_back(nodes[*it].id);
                    cyc.push_back(nodes[w].id);
                    return cyc;
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    path.push_back(w);
                }
            } else {
                state[u] = 2;
                path.pop_back();
            }
        }
    }
    return {};
}

}  // namespace

Network::Network(std::vector<NodeDef> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const NodeDef& a, const NodeDef& b) { return a.id < b.id; });
    std::sort(arcs_.begin(), arcs_.end());

    std::unordered_map<int, int> index;
    index.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const NodeDef& nd = nodes_[i];
        if (!index.emplace(nd.id, static_cast<int>(i)).second)
            throw validation_error("duplicate node id " + std::to_string(nd.id));
        if (nd.values < 2)
            throw validation_error("values < 2 for node " + std::to_string(nd.id));
    }

    parents_.assign(nodes_.size(), {});
    children_.assign(nodes_.size(), {});
    const Arc* prev = nullptr;
    for (const Arc& a : arcs_) {
        if (a.first == a.second)
            throw validation_error("self-arc on node " + std::to_string(a.first));
        if (prev && *prev == a)
            throw validation_error("duplicate arc (" + std::to_string(a.first) + "," +
                                   std::to_string(a.second) + ")");
        prev = &a;
        auto t = index.find(a.first);
        auto h = index.find(a.second);
        if (t == index.end())
            throw validation_error("unknown arc endpoint " + std::to_string(a.first));
        if (h == index.end())
            throw validation_error("unknown arc endpoint " + std::to_string(a.second));
        children_[t->second].push_back(a.second);
        parents_[h->second].push_back(a.first);
    }
    for (auto& v : parents_) std::sort(v.begin(), v.end());
    for (auto& v : children_) std::sort(v.begin(), v.end());

    if (auto cyc = find_directed_cycle(nodes_, children_, index); !cyc.empty())
        throw validation_error("directed cycle via nodes " + join_ids(cyc));

    index_ = std::move(index);
}

bool Network::contains(int id) const { return index_.count(id) != 0; }

int Network::index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::out_of_range("unknown node id " + std::to_string(id));
    return it->second;
}

int Network::values_of(int id) const { return nodes_[index_of(id)].values; }

const std::vector<int>& Network::parents(int id) const { return parents_[index_of(id)]; }

const std::vector<int>& Network::children(int id) const { return children_[index_of(id)]; }

int Network::underlying_degree(int id) const {
    int i = index_of(id);
    return static_cast<int>(parents_[i].size() + children_[i].size());
}

NodeView Network::view(int id) const {
    int i = index_of(id);
    return {id, parents_[i], children_[i],
            static_cast<int>(parents_[i].size() + children_[i].size())};
}

Network load_network(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed network file: ") + e.what());
    }
    return network_from_json(j);
}

Network network_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("arcs"))
        throw parse_error("network file must be an object with \"nodes\" and \"arcs\"");
    std::vector<NodeDef> nodes;
    std::vector<Arc> arcs;
    try {
        for (const auto& n : j.at("nodes"))
            nodes.push_back({n.at("id").get<int>(), n.at("values").get<int>()});
        for (const auto& a : j.at("arcs")) {
            if (!a.is_array() || a.size() != 2)
                throw parse_error("arc entries must be [tail, head] pairs");
            arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed network file: ") + e.what());
    }
    return Network(std::move(nodes), std::move(arcs));
}

nlohmann::ordered_json network_to_json(const Network& net) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const NodeDef& n : net.nodes())
        j["nodes"].push_back({{"id", n.id}, {"values", n.values}});
    j["arcs"] = nlohmann::ordered_json::array();
    for (const Arc& a : net.arcs()) j["arcs"].push_back({a.first, a.second});
    return j;
}

std::string save_network(const Network& net) { return network_to_json(net).dump(); }

Network prune_degree_one(const Network& net, std::vector<int>* removed) {
    // Track degrees over the shrinking node set; queue seeds ascending so the
    // reported removal order is deterministic (the fixpoint itself is
    // order-independent).
    const auto& nodes = net.nodes();
    const int n = static_cast<int>(nodes.size());
    std::vector<int> degree(n);
    std::vector<char> gone(n, 0);
    for (int i = 0; i < n; ++i) degree[i] = net.underlying_degree(nodes[i].id);

    std::priority_queue<int, std::vector<int>, std::greater<>> queue;
    for (int i = 0; i < n; ++i)
        if (degree[i] <= 1) queue.push(i);

    auto neighbors = [&](int idx) {
        std::vector<int> out;
        for (int p : net.parents(nodes[idx].id)) out.push_back(net.index_of(p));
        for (int c : net.children(nodes[idx].id)) out.push_back(net.index_of(c));
        return out;
    };

    while (!queue.empty()) {
        int i = queue.top();
        queue.pop();
        if (gone[i] || degree[i] > 1) continue;
        gone[i] = 1;
        if (removed) removed->push_back(nodes[i].id);
        for (int j : neighbors(i)) {
            if (gone[j]) continue;
            if (--degree[j] <= 1) queue.push(j);
        }
    }

    std::vector<NodeDef> keep;
    std::set<int> kept_ids;
    for (int i = 0; i < n; ++i)
        if (!gone[i]) {
            keep.push_back(nodes[i]);
            kept_ids.insert(nodes[i].id);
        }
    std::vector<Arc> arcs;
    for (const Arc& a : net.arcs())
        if (kept_ids.count(a.first) && kept_ids.count(a.second)) arcs.push_back(a);
    return Network(std::move(keep), std::move(arcs));
}

Network remove_nodes(const Network& net, const std::set<int>& s) {
    for (int id : s)
        (void)net.index_of(id);  // membership check, throws on unknown ids
    std::vector<NodeDef> nodes;
    for (const NodeDef& n : net.nodes())
        if (!s.count(n.id)) nodes.push_back(n);
    std::vector<Arc> arcs;
    for (const Arc& a : net.arcs())
        if (!s.count(a.first) && !s.count(a.second)) arcs.push_back(a);
    return Network(std::move(nodes), std::move(arcs));
}

bool is_singly_connected(const Network& net) {
    if (net.empty()) return true;
    auto g = UndirectedView::of(net);
    return net.arc_count() == net.node_count() - component_count(g);
}

bool is_on_some_loop(const Network& net, int v) {
    const int idx = net.index_of(v);
    auto g = UndirectedView::of(net);
    auto bridge = bridge_edges(g);
    for (const auto& [w, e] : g.adj[idx]) {
        (void)w;
        if (!bridge[e]) return true;
    }
    return false;
}

bool has_same_loop_parents(const Network& net, int v) {
    const int idx = net.index_of(v);
    const auto& ps = net.parents(v);
    if (ps.size() < 2) return false;

    auto g = UndirectedView::of(net);
    auto block_of = biconnected_components(g);

    // Collect block ids of the in-edges of v; two in-edges in one block lie
    // on a common simple cycle through v (single-edge bridge blocks cannot
    // hold two edges, so any collision is a genuine shared loop).
    std::unordered_set<int> seen;
    for (const auto& [w, e] : g.adj[idx]) {
        int wid = net.nodes()[w].id;
        if (!std::binary_search(ps.begin(), ps.end(), wid)) continue;
        if (!seen.insert(block_of[e]).second) return true;
    }
    return false;
}

bool has_same_loop_parents_via_removal(const Network& net, int v) {
    const auto& ps = net.parents(v);
    if (ps.size() < 2) return false;
    Network reduced = remove_nodes(net, {v});
    auto g = UndirectedView::of(reduced);
    auto comp = connected_components(g);
    std::unordered_set<int> comps;
    for (int p : ps)
        if (!comps.insert(comp[reduced.index_of(p)]).second) return true;
    return false;
}

}  // namespace loopcut
