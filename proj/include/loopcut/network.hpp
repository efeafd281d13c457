#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace loopcut {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NodeDef {
    int id = 0;
    int values = 2;  // cardinality of the random variable, >= 2

    friend bool operator==(const NodeDef&, const NodeDef&) = default;
};

using Arc = std::pair<int, int>;  // (tail, head)

/// One node together with its neighborhoods. underlying_degree counts
/// incident arcs regardless of direction.
struct NodeView {
    int id = 0;
    std::vector<int> parents;
    std::vector<int> children;
    int underlying_degree = 0;
};

/// Immutable directed-acyclic-graph skeleton of a belief network.
///
/// Construction validates every invariant (unique ids, values >= 2, declared
/// endpoints, no self or duplicate arcs, no directed cycle) and builds the
/// adjacency indices. All reductions below return new Network values; a
/// constructed Network is safe to share across threads.
class Network {
public:
    Network() = default;
    Network(std::vector<NodeDef> nodes, std::vector<Arc> arcs);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    bool empty() const { return nodes_.empty(); }

    /// Nodes sorted by id ascending.
    const std::vector<NodeDef>& nodes() const { return nodes_; }
    /// Arcs sorted lexicographically (tail, head).
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool contains(int id) const;
    int values_of(int id) const;
    const std::vector<int>& parents(int id) const;
    const std::vector<int>& children(int id) const;
    /// |parents| + |children|: degree in the underlying undirected graph.
    int underlying_degree(int id) const;
    NodeView view(int id) const;

    /// Dense index of a node (position in nodes()); throws std::out_of_range
    /// for unknown ids. Used by the undirected-graph analyses.
    int index_of(int id) const;

    friend bool operator==(const Network& a, const Network& b) {
        return a.nodes_ == b.nodes_ && a.arcs_ == b.arcs_;
    }

private:
    std::vector<NodeDef> nodes_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> parents_;   // per dense index, sorted ids
    std::vector<std::vector<int>> children_;  // per dense index, sorted ids
    std::unordered_map<int, int> index_;      // id -> dense index
};

/// Parse and validate the canonical JSON network format:
///   { "nodes": [ {"id": <int>, "values": <int>}, ... ],
///     "arcs":  [ [<tail>, <head>], ... ] }
/// Any node/arc order is accepted on input.
Network load_network(const std::string& text);
Network network_from_json(const nlohmann::json& j);

/// Canonical serialization: nodes by id ascending, arcs lexicographic.
/// save_network(load_network(x)) is byte-stable.
nlohmann::ordered_json network_to_json(const Network& net);
std::string save_network(const Network& net);

/// Fixpoint of removing nodes of underlying degree <= 1 (degree-0 nodes
/// included) together with their incident arcs. Order-independent.
/// When `removed` is non-null, the removal sequence is appended to it.
Network prune_degree_one(const Network& net, std::vector<int>* removed = nullptr);

/// Copy of `net` with the nodes of `s` and all incident arcs deleted.
Network remove_nodes(const Network& net, const std::set<int>& s);

/// True iff the underlying undirected graph is a forest.
bool is_singly_connected(const Network& net);

/// True iff v lies on at least one simple cycle of the underlying undirected
/// graph (equivalently, some incident edge is not a bridge).
bool is_on_some_loop(const Network& net, int v);

/// True iff two distinct parents p, q of v have their in-arcs (p,v), (q,v) on
/// a common simple undirected cycle. Computed via biconnected components:
/// the two in-edges must share a block.
bool has_same_loop_parents(const Network& net, int v);

/// Alternative formulation of has_same_loop_parents: some pair of parents of
/// v is connected in the underlying graph with v deleted. Must agree with the
/// block-based test; kept separate so the equivalence stays testable.
bool has_same_loop_parents_via_removal(const Network& net, int v);

}  // namespace loopcut
