#include "helpers.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

#include "mvdsp/error.hpp"
#include "mvdsp/shortest_paths.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

using namespace mvdsp;
using testing_helpers::graph;
using testing_helpers::path;
using testing_helpers::unit_graph;

namespace {

std::set<std::pair<int, int>> arc_set(const Graph& g) {
    std::set<std::pair<int, int>> s;
    for (const Arc& a : g.arcs()) s.insert({a.tail, a.head});
    return s;
}

Graph random_test_graph(gen::Rng& rng, bool integer_weights) {
    const std::size_t n = gen::uniform(rng, 1, 8);
    const std::size_t m = gen::uniform(rng, 0, n * (n - 1));
    const bool directed = gen::uniform(rng, 0, 1);
    auto edges = gen::random_edges(rng, n, m, directed, !integer_weights);
    if (integer_weights)
        for (auto& e : edges) e.weight = Weight(static_cast<std::int64_t>(gen::uniform(rng, 0, 3)));
    return Graph(n, directed, edges);
}

} // namespace

TEST_CASE("lex_dijkstra examples") {
    SUBCASE("single vertex") {
        Graph g(1, false, std::vector<Arc>{});
        auto tree = lex_dijkstra(g, 0);
        CHECK(tree[0].dist == Weight::zero());
        CHECK(tree[0].hops == 0);
    }
    SUBCASE("path a-b-c") {
        auto tree = lex_dijkstra(unit_graph(3, false, {{0, 1}, {1, 2}}), 0);
        CHECK(tree[2].dist == Weight(2));
        CHECK(tree[2].hops == 2);
    }
    SUBCASE("hop tie-break") {
        Graph g = graph(3, true, {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {0, 2, Weight(2)}});
        auto tree = lex_dijkstra(g, 0);
        CHECK(tree[2].dist == Weight(2));
        CHECK(tree[2].hops == 1);
        CHECK(tree.path_to(2)->vertices == std::vector<VertexId>{0, 2});
    }
    SUBCASE("unreachable") {
        auto tree = lex_dijkstra(unit_graph(3, true, {{1, 0}}), 0);
        CHECK_FALSE(tree[1].reachable());
        CHECK_FALSE(tree.path_to(2));
    }
    SUBCASE("backward search") {
        auto tree = lex_dijkstra(unit_graph(3, true, {{0, 1}, {1, 2}}), 2, {}, SearchDirection::backward);
        CHECK(tree[0].dist == Weight(2));
        CHECK_FALSE(lex_dijkstra(unit_graph(3, true, {{0, 1}, {1, 2}}), 2)[0].reachable());
    }
    SUBCASE("mask") {
        Graph g = unit_graph(4, false, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
        std::vector<std::uint8_t> mask{1, 0, 1, 1};
        auto tree = lex_dijkstra(g, 0, mask);
        CHECK(tree.path_to(3)->vertices == std::vector<VertexId>{0, 2, 3});
        CHECK_FALSE(tree[1].reachable());
    }
}

TEST_CASE("labels order unreachable last") {
    DistLabel none;
    DistLabel one{Weight(1), 3};
    DistLabel two{Weight(1), 4};
    CHECK(one < two);
    CHECK(two < none);
    CHECK(none == DistLabel{});
}

TEST_CASE("lex_dijkstra matches path enumeration") {
    gen::Rng rng(8101);
    for (int round = 0; round < 150; ++round) {
        Graph g = random_test_graph(rng, round % 2 == 0);
        for (VertexId s = 0; s < static_cast<VertexId>(g.vertex_count()); ++s) {
            auto tree = lex_dijkstra(g, s);
            for (VertexId t = 0; t < static_cast<VertexId>(g.vertex_count()); ++t) {
                auto expect = oracle::best_label(g, s, t);
                REQUIRE(tree[t].reachable() == expect.dist.has_value());
                if (!expect.dist) continue;
                CHECK(*tree[t].dist == *expect.dist);
                CHECK(tree[t].hops == expect.hops);
                // tree paths realise their labels
                auto p = tree.path_to(t);
                REQUIRE(p);
                CHECK(path_weight(g, *p) == expect.dist);
                CHECK(p->arc_count() == expect.hops);
            }
            // triangle property
            for (const Arc& a : g.arcs())
                if (tree[a.tail].reachable()) CHECK(*tree[a.head].dist <= *tree[a.tail].dist + a.weight);
        }
    }
}

TEST_CASE("unit weights give BFS distances") {
    gen::Rng rng(77);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = gen::uniform(rng, 1, 12);
        Graph g(n, false, gen::random_edges(rng, n, gen::uniform(rng, 0, 2 * n), false, false));
        std::vector<long> bfs(n, -1);
        std::deque<VertexId> q{0};
        bfs[0] = 0;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (const Arc& a : g.out_arcs(u))
                if (bfs[a.head] < 0) {
                    bfs[a.head] = bfs[u] + 1;
                    q.push_back(a.head);
                }
        }
        auto tree = lex_dijkstra(g, 0);
        for (std::size_t v = 0; v < n; ++v) {
            REQUIRE(tree.labels[v].reachable() == (bfs[v] >= 0));
            if (bfs[v] < 0) continue;
            CHECK(*tree.labels[v].dist == Weight(bfs[v]));
            CHECK(tree.labels[v].hops == static_cast<std::size_t>(bfs[v]));
        }
    }
}

TEST_CASE("min_arc_shortest_path examples") {
    CHECK(min_arc_shortest_path(unit_graph(3, false, {{0, 1}, {1, 2}}), 0, 2)->vertices ==
          std::vector<VertexId>{0, 1, 2});
    Graph g = graph(3, true, {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {0, 2, Weight(2)}});
    CHECK(min_arc_shortest_path(g, 0, 2)->vertices == std::vector<VertexId>{0, 2});
    CHECK_FALSE(min_arc_shortest_path(unit_graph(4, false, {{0, 1}, {2, 3}}), 0, 3));
}

TEST_CASE("shortest_path_dag examples") {
    CHECK(arc_set(shortest_path_dag(unit_graph(3, false, {{0, 1}, {1, 2}}), 0, 2)) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(arc_set(shortest_path_dag(unit_graph(4, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 0, 2)) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}, {3, 2}});
    Graph g = graph(3, true, {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {0, 2, Weight(3)}});
    CHECK(arc_set(shortest_path_dag(g, 0, 2)) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(shortest_path_dag(unit_graph(3, false, {{0, 1}}), 0, 2), Error);
}

TEST_CASE("enumeration handles zero-weight cycles") {
    // 0 -1- {1,2} joined by a zero edge -1- 3: both 1 and 2 sit on shortest paths.
    Graph g = graph(4, false, {{0, 1, Weight(1)}, {0, 2, Weight(1)}, {1, 2, Weight(0)}, {1, 3, Weight(1)}, {2, 3, Weight(1)}});
    Graph dag = shortest_path_dag(g, 0, 3);
    CHECK(dag.arc_weight(1, 2));
    CHECK(dag.arc_weight(2, 1));
    auto paths = enumerate_shortest_paths(g, 0, 3, 100);
    REQUIRE(paths);
    CHECK(paths->size() == 4); // 0-1-3, 0-2-3, 0-1-2-3, 0-2-1-3
    for (const auto& p : *paths) CHECK(path_weight(g, p) == Weight(2));
}

TEST_CASE("enumerate_shortest_paths matches the oracle") {
    gen::Rng rng(4242);
    for (int round = 0; round < 100; ++round) {
        Graph g = random_test_graph(rng, round % 3 == 0);
        const auto n = static_cast<VertexId>(g.vertex_count());
        for (VertexId s = 0; s < n; ++s)
            for (VertexId t = 0; t < n; ++t) {
                if (s == t || !lex_dijkstra(g, s)[t].reachable()) continue;
                auto got = enumerate_shortest_paths(g, s, t, 100000);
                REQUIRE(got);
                auto want = oracle::shortest_paths(g, s, t);
                auto key = [](const std::vector<Path>& ps) {
                    std::set<std::vector<VertexId>> k;
                    for (const auto& p : ps) k.insert(p.vertices);
                    return k;
                };
                CHECK(got->size() == want.size());
                CHECK(key(*got) == key(want));
            }
    }
}

TEST_CASE("enumeration respects its cap") {
    // grid-like ladder: 2^5 shortest paths
    std::vector<Arc> arcs;
    for (int i = 0; i < 5; ++i) {
        int a = 3 * i, top = a + 1, bottom = a + 2, next = a + 3;
        arcs.push_back({a, top, Weight::one()});
        arcs.push_back({a, bottom, Weight::one()});
        arcs.push_back({top, next, Weight::one()});
        arcs.push_back({bottom, next, Weight::one()});
    }
    Graph g(16, false, arcs);
    CHECK(enumerate_shortest_paths(g, 0, 15, 32)->size() == 32);
    CHECK_FALSE(enumerate_shortest_paths(g, 0, 15, 31));
}

TEST_CASE("shortest_path_vertices") {
    Instance in(unit_graph(5, false, {{0, 1}, {1, 2}, {2, 3}, {0, 4}}), {{0, 2}}, 1);
    auto mask = shortest_path_vertices(in);
    CHECK(mask == std::vector<std::uint8_t>{1, 1, 1, 0, 0});
}
