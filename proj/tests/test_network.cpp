#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "loopcut/exact.hpp"
#include "loopcut/graph_analysis.hpp"
#include "loopcut/network.hpp"

using namespace loopcut;

namespace {

// Brute-force route for the same-loop-parents equivalence checks: v has two
// parents in a common loop iff some enumerated loop has v head-to-head.
bool same_loop_parents_brute(const Network& net, int v) {
    for (const Loop& loop : enumerate_loops(net).loops)
        for (std::size_t i = 0; i < loop.nodes.size(); ++i)
            if (loop.nodes[i] == v && loop.roles[i] == LoopRole::sink) return true;
    return false;
}

}  // namespace

TEST_CASE("load accepts the diamond file") {
    const std::string text = R"({"nodes":[{"id":1,"values":2},{"id":2,"values":2},
        {"id":3,"values":2},{"id":4,"values":2}],
        "arcs":[[1,2],[1,3],[2,4],[3,4]]})";
    Network net = load_network(text);
    CHECK(net.node_count() == 4);
    CHECK(net.arc_count() == 4);
    CHECK(net == fixtures::diamond());
}

TEST_CASE("load rejects directed cycles") {
    const std::string text =
        R"({"nodes":[{"id":1,"values":2},{"id":2,"values":2}],"arcs":[[1,2],[2,1]]})";
    CHECK_THROWS_WITH_AS(load_network(text), doctest::Contains("directed cycle"),
                         validation_error);
}

TEST_CASE("load accepts the empty network") {
    Network net = load_network(R"({"nodes":[],"arcs":[]})");
    CHECK(net.empty());
    CHECK(net.arc_count() == 0);
}

TEST_CASE("load rejects malformed inputs and invariant violations") {
    CHECK_THROWS_AS(load_network("not json"), parse_error);
    CHECK_THROWS_AS(load_network(R"({"nodes":[]})"), parse_error);
    CHECK_THROWS_WITH_AS(
        load_network(R"({"nodes":[{"id":1,"values":1}],"arcs":[]})"),
        doctest::Contains("values"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_network(R"({"nodes":[{"id":1,"values":2},{"id":1,"values":2}],"arcs":[]})"),
        doctest::Contains("duplicate node"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_network(R"({"nodes":[{"id":1,"values":2}],"arcs":[[1,7]]})"),
        doctest::Contains("unknown arc endpoint"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_network(R"({"nodes":[{"id":1,"values":2}],"arcs":[[1,1]]})"),
        doctest::Contains("self-arc"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_network(R"({"nodes":[{"id":1,"values":2},{"id":2,"values":2}],
                         "arcs":[[1,2],[1,2]]})"),
        doctest::Contains("duplicate arc"), validation_error);
}

TEST_CASE("serialization is canonical and load-order independent") {
    const std::string shuffled = R"({"arcs":[[3,4],[1,2],[2,4],[1,3]],
        "nodes":[{"id":4,"values":2},{"id":1,"values":2},{"id":3,"values":2},{"id":2,"values":2}]})";
    Network net = load_network(shuffled);
    std::string canonical = save_network(net);
    CHECK(canonical == save_network(fixtures::diamond()));
    CHECK(save_network(load_network(canonical)) == canonical);
}

TEST_CASE("prune_degree_one") {
    CHECK(prune_degree_one(fixtures::chain3()).empty());
    CHECK(prune_degree_one(fixtures::diamond()) == fixtures::diamond());
    CHECK(prune_degree_one(fixtures::diamond_with_pendant()) == fixtures::diamond());

    SUBCASE("degree-0 nodes are removed too") {
        Network net({{1, 2}, {9, 2}}, {});
        CHECK(prune_degree_one(net).empty());
    }
    SUBCASE("input is not mutated") {
        Network net = fixtures::diamond_with_pendant();
        (void)prune_degree_one(net);
        CHECK(net.node_count() == 5);
    }
}

TEST_CASE("is_on_some_loop") {
    CHECK(is_on_some_loop(fixtures::diamond(), 1));
    CHECK_FALSE(is_on_some_loop(fixtures::double_diamond_bridge(), 9));
    Network isolated({{1, 2}}, {});
    CHECK_FALSE(is_on_some_loop(isolated, 1));
    CHECK_THROWS_AS(is_on_some_loop(fixtures::diamond(), 99), std::out_of_range);

    SUBCASE("bridge midpoint confirmed by cycle enumeration") {
        for (const Loop& loop : enumerate_loops(fixtures::double_diamond_bridge()).loops)
            CHECK(std::find(loop.nodes.begin(), loop.nodes.end(), 9) == loop.nodes.end());
    }
}

TEST_CASE("has_same_loop_parents") {
    CHECK(has_same_loop_parents(fixtures::diamond(), 4));
    CHECK_FALSE(has_same_loop_parents(fixtures::collider_only(), 3));
    CHECK_FALSE(has_same_loop_parents(fixtures::two_triangle_petals(), 5));
    CHECK_THROWS_AS(has_same_loop_parents(fixtures::diamond(), 99), std::out_of_range);

    SUBCASE("petal witness confirmed by cycle enumeration") {
        CHECK_FALSE(same_loop_parents_brute(fixtures::two_triangle_petals(), 5));
        CHECK(same_loop_parents_brute(fixtures::diamond(), 4));
    }
}

TEST_CASE("node views expose neighborhoods and undirected degree") {
    NodeView v = fixtures::diamond().view(4);
    CHECK(v.id == 4);
    CHECK(v.parents == std::vector<int>{2, 3});
    CHECK(v.children.empty());
    CHECK(v.underlying_degree == 2);
    CHECK_THROWS_AS(fixtures::diamond().view(42), std::out_of_range);
}

TEST_CASE("is_singly_connected") {
    CHECK(is_singly_connected(fixtures::chain3()));
    CHECK_FALSE(is_singly_connected(fixtures::diamond()));
    CHECK(is_singly_connected(Network{}));
}

TEST_CASE("remove_nodes") {
    Network rest = remove_nodes(fixtures::diamond(), {1});
    CHECK(rest.node_count() == 3);
    CHECK(rest.arcs() == std::vector<Arc>{{2, 4}, {3, 4}});

    CHECK(remove_nodes(fixtures::diamond(), {}) == fixtures::diamond());

    Network pair = remove_nodes(fixtures::diamond(), {1, 4});
    CHECK(pair.node_count() == 2);
    CHECK(pair.arc_count() == 0);
    CHECK(pair.contains(2));
    CHECK(pair.contains(3));
    CHECK_FALSE(pair.contains(1));

    CHECK_THROWS_AS(remove_nodes(fixtures::diamond(), {42}), std::out_of_range);
}

TEST_CASE("core-graph properties over sampled and exhaustive graphs") {
    auto graphs = fixtures::sample_networks(120, 8, 0xC0FFEE);
    for (const auto& g : fixtures::exhaustive_dags(4)) graphs.push_back(g);

    for (const Network& net : graphs) {
        CAPTURE(save_network(net));

        // prune is idempotent
        Network once = prune_degree_one(net);
        CHECK(prune_degree_one(once) == once);

        // prune never removes a node that lies on a loop
        std::vector<int> removed;
        (void)prune_degree_one(net, &removed);
        for (int id : removed) CHECK_FALSE(is_on_some_loop(net, id));

        // singly connected inputs prune to nothing
        if (is_singly_connected(net)) CHECK(once.empty());

        // three-way equivalence of the same-loop-parents formulations
        for (const NodeDef& n : net.nodes()) {
            bool via_blocks = has_same_loop_parents(net, n.id);
            CHECK(via_blocks == has_same_loop_parents_via_removal(net, n.id));
            CHECK(via_blocks == same_loop_parents_brute(net, n.id));
        }

        // removed nodes are not reported by membership queries
        if (!net.empty()) {
            int victim = net.nodes().front().id;
            Network rest = remove_nodes(net, {victim});
            CHECK_FALSE(rest.contains(victim));
            for (const Arc& a : rest.arcs()) {
                CHECK(a.first != victim);
                CHECK(a.second != victim);
            }
        }
    }
}
