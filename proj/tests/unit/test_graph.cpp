#include "helpers.hpp"

#include "mvdsp/error.hpp"
#include "mvdsp/graph.hpp"
#include "mvdsp/instance.hpp"

#include <doctest.h>

using namespace mvdsp;
using testing_helpers::graph;
using testing_helpers::unit_graph;

TEST_CASE("undirected graphs store both orientations") {
    Graph g = unit_graph(3, false, {{0, 1}, {2, 1}});
    CHECK(g.arc_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.arc_weight(1, 0) == Weight::one());
    CHECK(g.arc_weight(1, 2) == Weight::one());
    CHECK_FALSE(g.arc_weight(0, 2));
    auto edges = g.edges();
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].tail == 0);
    CHECK(edges[0].head == 1);
    CHECK(edges[1].tail == 1);
    CHECK(edges[1].head == 2);
    for (const Arc& a : g.arcs()) CHECK(g.arc_weight(a.head, a.tail) == a.weight);
}

TEST_CASE("directed graphs keep orientation") {
    Graph g = unit_graph(3, true, {{0, 1}, {2, 1}});
    CHECK(g.arc_count() == 2);
    CHECK(g.out_degree(2) == 1);
    CHECK(g.in_degree(1) == 2);
    CHECK_FALSE(g.arc_weight(1, 0));
    auto in = g.in_arcs(1);
    REQUIRE(in.size() == 2);
    CHECK(in[0].tail == 0);
    CHECK(in[1].tail == 2);
}

TEST_CASE("parallel arcs collapse to the lightest") {
    Graph g = graph(2, false, {{0, 1, Weight(3)}, {1, 0, Weight(1, 2)}, {0, 1, Weight(2)}});
    CHECK(g.edge_count() == 1);
    CHECK(g.arc_weight(0, 1) == Weight(1, 2));
    CHECK(g.arc_weight(1, 0) == Weight(1, 2));
    CHECK_FALSE(g.is_unit_weight());
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(unit_graph(2, false, {{0, 0}}), Error);
    CHECK_THROWS_AS(unit_graph(2, false, {{0, 2}}), Error);
    CHECK_THROWS_AS(unit_graph(2, true, {{-1, 1}}), Error);
}

TEST_CASE("instance validation") {
    Graph g = unit_graph(3, false, {{0, 1}, {1, 2}});
    CHECK_NOTHROW(Instance(g, {{0, 2}}, 1));
    CHECK_THROWS_AS(Instance(g, {{1, 1}}, 1), Error);
    CHECK_THROWS_AS(Instance(g, {{0, 3}}, 1), Error);
    CHECK_THROWS_AS(Instance(g, {{0, 2}}, 2), Error);
    CHECK_THROWS_AS(Instance(g, {{0, 2}}, 1, Layering{{0}, {1, 0}, {2}}), Error);
    CHECK_THROWS_AS(Instance(g, {{0, 2}}, 1, Layering{{0}, {5}}), Error);
    Instance in(g, {{0, 2}}, 1, Layering{{0}, {1}, {2}});
    CHECK(in.with_target(0).target() == 0);
    CHECK_THROWS_AS(in.with_target(2), Error);
    CHECK(in.with_target(1) == in);
}

TEST_CASE("instance layers are kept sorted") {
    Graph g = unit_graph(4, false, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    Instance in(g, {{0, 3}}, 1, Layering{{0}, {2, 1}, {3}});
    CHECK((*in.layering())[1] == std::vector<VertexId>{1, 2});
}

TEST_CASE("path weight") {
    Graph g = graph(3, true, {{0, 1, Weight(1, 2)}, {1, 2, Weight(1, 3)}});
    CHECK(path_weight(g, testing_helpers::path({0, 1, 2})) == Weight(5, 6));
    CHECK(path_weight(g, testing_helpers::path({0})) == Weight::zero());
    CHECK_FALSE(path_weight(g, testing_helpers::path({2, 1})));
    CHECK_FALSE(path_weight(g, testing_helpers::path({})));
    Graph u = unit_graph(3, false, {{0, 1}, {1, 2}});
    CHECK_FALSE(path_weight(u, testing_helpers::path({0, 1, 0})));
}

TEST_CASE("solution bookkeeping") {
    Solution s;
    s.entries.push_back({3, testing_helpers::path({4, 5})});
    s.entries.push_back({1, testing_helpers::path({0, 1, 2})});
    CHECK(s.total_arcs() == 3);
    s.normalize();
    CHECK(s.entries[0].pair_index == 1);
}
