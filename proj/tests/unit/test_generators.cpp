#include "helpers.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

#include "mvdsp/brute_force.hpp"
#include "mvdsp/error.hpp"
#include "mvdsp/generators.hpp"
#include "mvdsp/shortest_paths.hpp"
#include "mvdsp/verify.hpp"

#include <doctest.h>

#include <set>

using namespace mvdsp;
using testing_helpers::unit_graph;

namespace {

std::size_t optimum(const GadgetInstance& g) { return brute_force_optimum(g.instance).solution.size(); }

bool labels_unique(const GadgetInstance& g) {
    std::set<std::string> seen(g.vertex_labels.begin(), g.vertex_labels.end());
    return seen.size() == g.vertex_labels.size() && g.vertex_labels.size() == g.instance.vertex_count();
}

std::size_t max_degree(const Graph& g) {
    std::size_t d = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.out_degree(static_cast<VertexId>(v)));
    return d;
}

// The colored input of the sample multicolored instance: 4 classes of 4 vertices.
ColoredGraph sample_colored_input() {
    const int codes[] = {1333, 1233, 3143, 2331, 1341, 1223, 1143, 3342, 1222, 1231, 2143, 2242, 2331,
                         3242, 1123, 1132, 1141, 2332, 2341, 3241, 1424, 1434, 1444, 2434, 2444, 3444};
    std::set<std::pair<int, int>> edges;
    for (int code : codes) {
        const int i = code / 1000, j = code / 100 % 10, x = code / 10 % 10, y = code % 10;
        edges.insert({(i - 1) * 4 + (j - 1), (x - 1) * 4 + (y - 1)});
    }
    std::vector<Arc> arcs;
    for (auto [u, v] : edges) arcs.push_back({u, v, Weight::one()});
    return {Graph(16, false, arcs), 4, 4};
}

Graph sample_clique_input() {
    const int codes[] = {12, 14, 15, 16, 23, 25, 26, 34, 36, 45, 56};
    std::vector<Arc> arcs;
    for (int c : codes) arcs.push_back({c / 10 - 1, c % 10 - 1, Weight::one()});
    return Graph(6, false, arcs);
}

// Disjoint monotone paths over `layers` layers, all pairs routable.
GadgetInstance parallel_paths(std::size_t layers, std::size_t pairs) {
    GadgetBuilder b;
    std::vector<TerminalPair> terminals;
    for (std::size_t i = 0; i < pairs; ++i) {
        VertexId prev = b.add_vertex("p" + std::to_string(i) + "_1", 1);
        const VertexId first = prev;
        for (std::size_t l = 2; l <= layers; ++l) {
            VertexId v = b.add_vertex("p" + std::to_string(i) + "_" + std::to_string(l), l);
            b.add_edge(prev, v);
            prev = v;
        }
        terminals.push_back({first, prev});
    }
    return b.build(terminals, pairs, Provenance::plain, "all pairs routable", true);
}

bool all_routable(const GadgetInstance& g) { return optimum(g) == g.instance.pair_count(); }

} // namespace

TEST_CASE("multicolored clique examples") {
    SUBCASE("one vertex") {
        auto g = gen_multicolored_clique({Graph(1, false, std::vector<Arc>{}), 1, 1});
        CHECK(g.instance.pair_count() == 1);
        CHECK(optimum(g) == 1);
        CHECK(g.provenance == Provenance::multicolored_clique);
        CHECK(labels_unique(g));
    }
    SUBCASE("one edge between two classes") {
        auto g = gen_multicolored_clique({unit_graph(2, false, {{0, 1}}), 2, 1});
        CHECK(optimum(g) == 2);
    }
    SUBCASE("no edge between two classes") {
        auto g = gen_multicolored_clique({unit_graph(2, false, {}), 2, 1});
        CHECK(optimum(g) == 1);
    }
    SUBCASE("sample input") {
        auto input = sample_colored_input();
        auto g = gen_multicolored_clique(input);
        CHECK(g.instance.pair_count() == 4);
        CHECK(max_degree(g.instance.graph()) <= 3);
        for (const auto& p : g.instance.pairs()) {
            CHECK(g.instance.graph().out_degree(p.source) == 1);
            CHECK(g.instance.graph().out_degree(p.target) == 1);
        }
        auto r = brute_force_optimum(g.instance);
        CHECK(r.solution.size() == 4);
        CHECK(verify_solution(g.instance, r.solution).feasible());
        CHECK(labels_unique(g));
    }
}

TEST_CASE("multicolored clique rejects bad input") {
    CHECK_THROWS_AS(gen_multicolored_clique({unit_graph(4, false, {{0, 1}}), 2, 2}), GadgetError);
    CHECK_THROWS_AS(gen_multicolored_clique({unit_graph(3, false, {}), 2, 2}), GadgetError);
    CHECK_THROWS_AS(gen_multicolored_clique({unit_graph(2, true, {{0, 1}}), 2, 1}), GadgetError);
    CHECK_THROWS_AS(gen_multicolored_clique({Graph(0, false, std::vector<Arc>{}), 0, 0}), GadgetError);
}

TEST_CASE("clique examples") {
    SUBCASE("one vertex") {
        auto g = gen_clique(Graph(1, false, std::vector<Arc>{}));
        CHECK(optimum(g) == 1);
    }
    SUBCASE("two isolated vertices") {
        auto g = gen_clique(Graph(2, false, std::vector<Arc>{}));
        CHECK(optimum(g) == 1);
    }
    SUBCASE("one edge") {
        CHECK(optimum(gen_clique(unit_graph(2, false, {{0, 1}}))) == 2);
    }
    SUBCASE("sample input") {
        const Graph input = sample_clique_input();
        auto g = gen_clique(input);
        CHECK(oracle::max_clique(input) == 4);
        CHECK(optimum(g) == 4);
        CHECK(g.instance.vertex_count() <= 3 * 6 * 6);
        CHECK(g.instance.graph().edge_count() <= 3 * 6 * 6);
        CHECK(labels_unique(g));
        // one pair per input vertex, each with a single shortest path of 3N-1 arcs
        REQUIRE(g.instance.pair_count() == 6);
        for (const auto& p : g.instance.pairs()) {
            auto paths = enumerate_shortest_paths(g.instance.graph(), p.source, p.target, 10);
            REQUIRE(paths);
            CHECK(paths->size() == 1);
            CHECK(paths->front().arc_count() == 17);
        }
    }
}

TEST_CASE("clique correspondence on random graphs") {
    gen::Rng rng(8);
    for (int round = 0; round < 30; ++round) {
        CAPTURE(round);
        Graph input = gen::random_graph(rng, gen::uniform(rng, 1, 5), 0.5);
        CHECK(optimum(gen_clique(input)) == oracle::max_clique(input));
    }
}

TEST_CASE("clique rejects weighted or directed input") {
    CHECK_THROWS_AS(gen_clique(unit_graph(2, true, {{0, 1}})), GadgetError);
    CHECK_THROWS_AS(gen_clique(testing_helpers::graph(2, false, {{0, 1, Weight(2)}})), GadgetError);
    CHECK_THROWS_AS(gen_clique(Graph(0, false, std::vector<Arc>{})), GadgetError);
}

TEST_CASE("3-SAT examples") {
    SUBCASE("single positive clause") {
        auto g = gen_sat3_layered({1, {{1}}});
        CHECK(g.instance.pair_count() == 2);
        CHECK(all_routable(g));
        CHECK(verify_layering(g.instance).feasible());
    }
    SUBCASE("contradiction") {
        auto g = gen_sat3_layered({1, {{1}, {-1}}});
        CHECK(g.instance.pair_count() == 3);
        CHECK(optimum(g) == 2);
        CHECK(verify_layering(g.instance).feasible());
    }
    SUBCASE("sample formula") {
        auto g = gen_sat3_layered({3, {{1, 2, -3}, {1, -2, 3}}});
        REQUIRE(g.instance.layering());
        CHECK(g.instance.layering()->size() == 10);
        CHECK(g.instance.pair_count() == 3);
        CHECK(verify_layering(g.instance).feasible());
        CHECK(all_routable(g));
        CHECK(labels_unique(g));
        CHECK(g.provenance == Provenance::sat3_layered);
    }
}

TEST_CASE("3-SAT correspondence on random formulas") {
    gen::Rng rng(6);
    for (int round = 0; round < 40; ++round) {
        CAPTURE(round);
        auto f = gen::random_cnf(rng, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3), 1, 3);
        auto g = gen_sat3_layered(f);
        CHECK(verify_layering(g.instance).feasible());
        CHECK(all_routable(g) == oracle::satisfiable(f));
    }
}

TEST_CASE("3-SAT rejects bad formulas") {
    CHECK_THROWS_AS(gen_sat3_layered({0, {}}), GadgetError);
    CHECK_THROWS_AS(gen_sat3_layered({2, {}}), GadgetError);
    CHECK_THROWS_AS(gen_sat3_layered({4, {{1, 2, 3, 4}}}), GadgetError);
    CHECK_THROWS_AS(gen_sat3_layered({2, {{1, -1}}}), GadgetError);
    CHECK_THROWS_AS(gen_sat3_layered({2, {{3}}}), GadgetError);
    CHECK_THROWS_AS(gen_sat3_layered({2, {{}}}), GadgetError);
}

TEST_CASE("merge layer count and semantics") {
    SUBCASE("two 9-layer instances") {
        auto yes = parallel_paths(9, 3);
        auto no = trivial_no_instance(9, 3);
        CHECK(verify_layering(yes.instance).feasible());
        CHECK(verify_layering(no.instance).feasible());
        CHECK_FALSE(all_routable(no));
        auto m = merge_layered(yes, no);
        REQUIRE(m.instance.layering());
        CHECK(m.instance.layering()->size() == 15);
        CHECK(m.instance.pair_count() == 3);
        CHECK(verify_layering(m.instance).feasible());
        CHECK(all_routable(m));
        CHECK(all_routable(merge_layered(yes, yes)));
        CHECK(all_routable(merge_layered(no, yes)));
        CHECK_FALSE(all_routable(merge_layered(no, no)));
        CHECK(labels_unique(m));
        CHECK(m.provenance == Provenance::merged);
    }
    SUBCASE("satisfiable and unsatisfiable formulas of one shape") {
        auto yes = gen_sat3_layered({1, {{1}, {1}}});
        auto no = gen_sat3_layered({1, {{1}, {-1}}});
        CHECK(all_routable(yes));
        CHECK_FALSE(all_routable(no));
        CHECK(all_routable(merge_layered(yes, no)));
        CHECK_FALSE(all_routable(merge_layered(no, no)));
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(merge_layered(parallel_paths(4, 2), parallel_paths(5, 2)), GadgetError);
        CHECK_THROWS_AS(merge_layered(parallel_paths(4, 2), parallel_paths(4, 3)), GadgetError);
        CHECK_THROWS_AS(merge_layered(as_gadget(testing_helpers::conflict_instance()), parallel_paths(4, 2)),
                        GadgetError);
    }
}

TEST_CASE("trivial no-instances of every small shape") {
    for (std::size_t layers = 1; layers <= 6; ++layers)
        for (std::size_t pairs = 1; pairs <= 3; ++pairs) {
            CAPTURE(layers);
            CAPTURE(pairs);
            auto g = trivial_no_instance(layers, pairs);
            CHECK(g.instance.layering()->size() == layers);
            CHECK(is_structurally_layered(g.instance));
            CHECK_FALSE(all_routable(g));
        }
}

TEST_CASE("cross composition") {
    auto no = trivial_no_instance(4, 2);
    auto yes = parallel_paths(4, 2);
    SUBCASE("single instance is unchanged") {
        auto c = cross_compose({yes});
        CHECK(c.instance == yes.instance);
    }
    SUBCASE("three no-instances") {
        auto c = cross_compose({no, no, no});
        CHECK(c.instance.layering()->size() == 4 + 2 * 2 + 2 * 2);
        CHECK_FALSE(all_routable(c));
    }
    SUBCASE("no then yes") {
        auto c = cross_compose({no, yes});
        CHECK(c.instance.layering()->size() == 8);
        CHECK(all_routable(c));
    }
    SUBCASE("yes in the padded quadruple") {
        auto c = cross_compose({no, no, yes});
        CHECK(all_routable(c));
        CHECK(verify_layering(c.instance).feasible());
    }
    CHECK_THROWS_AS(cross_compose({}), GadgetError);
}

TEST_CASE("builder errors") {
    GadgetBuilder b;
    b.add_vertex("x", 1);
    b.add_vertex("x", 2);
    CHECK_THROWS_AS(b.build({}, 0, Provenance::plain, "", false), GadgetError);
    GadgetBuilder c;
    auto u = c.add_vertex("u", 1);
    auto v = c.add_vertex("v");
    c.connect(u, v, 3, "uv");
    CHECK(c.vertex_count() == 4);
    CHECK(c.label(2) == "uv#1");
    CHECK_THROWS_AS(c.build({{u, v}}, 1, Provenance::plain, "", true), GadgetError);
    CHECK_THROWS_AS(c.connect(u, v, 0, "zero"), GadgetError);
    auto g = c.build({{u, v}}, 1, Provenance::plain, "", false);
    CHECK(g.instance.graph().edge_count() == 3);
}
