#include "mvdsp/generators.hpp"

#include "gadget_check.hpp"
#include "mvdsp/error.hpp"

#include <string>
#include <vector>

namespace mvdsp {

namespace {

// Crossing region of input vertices i < x (1-based): column i, row x. Path i
// runs down column i through a -> b, path x runs along row x through c -> d.
// Without the edge {i, x} the region collapses to a = c and b = d.
struct Region {
    VertexId a = -1, b = -1, c = -1, d = -1;
};

std::string region_name(std::size_t i, std::size_t x) {
    return "[" + std::to_string(i) + "," + std::to_string(x) + "]";
}

} // namespace

GadgetInstance gen_clique(const Graph& input) {
    if (input.directed() || !input.is_unit_weight()) throw GadgetError("clique input must be undirected and unweighted");
    const std::size_t n = input.vertex_count();
    if (n == 0) throw GadgetError("clique input has no vertices");

    GadgetBuilder b;
    std::vector<TerminalPair> pairs;
    for (std::size_t i = 1; i <= n; ++i) {
        VertexId s = b.add_vertex("s" + std::to_string(i));
        VertexId t = b.add_vertex("t" + std::to_string(i));
        pairs.push_back({s, t});
    }
    auto s = [&](std::size_t i) { return pairs[i - 1].source; };
    auto t = [&](std::size_t i) { return pairs[i - 1].target; };

    std::vector<Region> regions(n * n);
    auto region = [&](std::size_t i, std::size_t x) -> Region& { return regions[(i - 1) * n + (x - 1)]; };
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t x = i + 1; x <= n; ++x) {
            Region& r = region(i, x);
            const std::string name = region_name(i, x);
            const bool edge = input.arc_weight(static_cast<VertexId>(i - 1), static_cast<VertexId>(x - 1)).has_value();
            if (edge) {
                r.a = b.add_vertex("a" + name);
                r.b = b.add_vertex("b" + name);
                r.c = b.add_vertex("c" + name);
                r.d = b.add_vertex("d" + name);
                b.add_edge(r.a, r.b);
                b.add_edge(r.c, r.d);
            } else {
                r.a = r.c = b.add_vertex("ac" + name);
                r.b = r.d = b.add_vertex("bd" + name);
                b.add_edge(r.a, r.b);
            }
        }
    }

    auto link = [&](VertexId u, VertexId v) { b.connect(u, v, 2, b.label(u) + "~" + b.label(v)); };
    if (n == 1) link(s(1), t(1));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t x = i + 1; x <= n; ++x) {
            if (x > i + 1) link(region(i, x).d, region(i + 1, x).c);
            if (x < n) link(region(i, x).b, region(i, x + 1).a);
        }
    }
    for (std::size_t i = 2; i <= n; ++i) link(s(i), region(1, i).c);
    for (std::size_t i = 1; i < n; ++i) link(region(i, n).b, t(i));
    for (std::size_t i = 2; i + 1 <= n; ++i) link(region(i - 1, i).d, region(i, i + 1).a);
    if (n >= 2) {
        link(s(1), region(1, 2).a);
        link(region(n - 1, n).d, t(n));
    }

    GadgetInstance g = b.build(std::move(pairs), n, Provenance::clique, "optimum = maximum clique size", false);

    const std::size_t bound = 3 * n * n;
    if (g.instance.vertex_count() > bound || g.instance.graph().edge_count() > bound)
        throw GadgetError("clique gadget exceeds its size bound");
    for (const auto& p : g.instance.pairs()) {
        auto c = detail::count_shortest_paths(g.instance.graph(), p.source, p.target);
        if (!c || c->hops != 3 * n - 1 || c->paths != 1)
            throw GadgetError("clique gadget: terminal pair without a unique shortest path of length 3N-1");
    }
    return g;
}

} // namespace mvdsp
