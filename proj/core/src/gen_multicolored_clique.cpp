#include "mvdsp/generators.hpp"

#include "gadget_check.hpp"
#include "mvdsp/error.hpp"

#include <bit>
#include <string>
#include <vector>

namespace mvdsp {

namespace {

// Crossing gadget for class vertices (i, j) and (a, b), i < a. The j-th path
// of color i runs u -> v, the b-th path of color a runs x -> y. Without the
// edge the gadget has only u = x and v = y.
struct Crossing {
    VertexId u = -1, v = -1, x = -1, y = -1;
};

std::size_t ceil_log2(std::size_t v) { return v <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(v - 1)); }

// Binary tree with leaves `leaves[lo, lo + span)` all at the same depth; the
// leaves are created by the caller, inner nodes here.
VertexId build_tree(GadgetBuilder& b, const std::string& prefix, const std::vector<VertexId>& leaves, std::size_t lo,
                    std::size_t span, std::size_t depth) {
    if (span == 1) return leaves[lo];
    VertexId node = b.add_vertex(prefix + ".T" + std::to_string(depth) + "." + std::to_string(lo));
    const std::size_t half = span / 2;
    b.add_edge(node, build_tree(b, prefix, leaves, lo, half, depth + 1));
    if (lo + half < leaves.size()) b.add_edge(node, build_tree(b, prefix, leaves, lo + half, half, depth + 1));
    return node;
}

} // namespace

GadgetInstance gen_multicolored_clique(const ColoredGraph& input) {
    const std::size_t k = input.colors;
    const std::size_t nu = input.class_size;
    const Graph& g = input.graph;
    if (g.directed() || !g.is_unit_weight()) throw GadgetError("multicolored clique input must be undirected and unweighted");
    if (k == 0 || nu == 0) throw GadgetError("multicolored clique input needs at least one color and one vertex per color");
    if (g.vertex_count() != k * nu)
        throw GadgetError("multicolored clique input has " + std::to_string(g.vertex_count()) + " vertices, expected " +
                          std::to_string(k * nu));
    for (const Arc& e : g.edges())
        if (static_cast<std::size_t>(e.tail) / nu == static_cast<std::size_t>(e.head) / nu)
            throw GadgetError("edge " + std::to_string(e.tail) + "-" + std::to_string(e.head) + " inside a color class");

    GadgetBuilder b;
    std::vector<TerminalPair> pairs;
    for (std::size_t i = 1; i <= k; ++i) {
        VertexId s = b.add_vertex("s" + std::to_string(i));
        VertexId t = b.add_vertex("t" + std::to_string(i));
        pairs.push_back({s, t});
    }

    const std::size_t height = ceil_log2(nu);
    const std::size_t width = std::size_t{1} << height;
    // sj[i-1][j-1] = s_i^j, tj likewise.
    std::vector<std::vector<VertexId>> sj(k), tj(k);
    for (std::size_t i = 1; i <= k; ++i) {
        const std::string si = "s" + std::to_string(i), ti = "t" + std::to_string(i);
        for (std::size_t j = 1; j <= nu; ++j) sj[i - 1].push_back(b.add_vertex(si + "^" + std::to_string(j)));
        for (std::size_t j = 1; j <= nu; ++j) tj[i - 1].push_back(b.add_vertex(ti + "^" + std::to_string(j)));
        b.add_edge(pairs[i - 1].source, build_tree(b, si, sj[i - 1], 0, width, 0));
        b.add_edge(pairs[i - 1].target, build_tree(b, ti, tj[i - 1], 0, width, 0));
    }
    auto S = [&](std::size_t i, std::size_t j) { return sj[i - 1][j - 1]; };
    auto T = [&](std::size_t i, std::size_t j) { return tj[i - 1][j - 1]; };

    std::vector<Crossing> crossings(k * k * nu * nu);
    auto cr = [&](std::size_t i, std::size_t a, std::size_t j, std::size_t bb) -> Crossing& {
        return crossings[(((i - 1) * k + (a - 1)) * nu + (j - 1)) * nu + (bb - 1)];
    };
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t a = i + 1; a <= k; ++a)
            for (std::size_t j = 1; j <= nu; ++j)
                for (std::size_t bb = 1; bb <= nu; ++bb) {
                    const std::string name = "[" + std::to_string(i) + "," + std::to_string(a) + ";" +
                                             std::to_string(j) + "," + std::to_string(bb) + "]";
                    const auto p = static_cast<VertexId>((i - 1) * nu + (j - 1));
                    const auto q = static_cast<VertexId>((a - 1) * nu + (bb - 1));
                    Crossing& c = cr(i, a, j, bb);
                    if (g.arc_weight(p, q)) {
                        c.u = b.add_vertex("u" + name);
                        c.v = b.add_vertex("v" + name);
                        c.x = b.add_vertex("x" + name);
                        c.y = b.add_vertex("y" + name);
                        b.add_edge(c.u, c.v);
                        b.add_edge(c.x, c.y);
                    } else {
                        c.u = c.x = b.add_vertex("ux" + name);
                        c.v = c.y = b.add_vertex("vy" + name);
                        b.add_edge(c.u, c.v);
                    }
                }

    auto link = [&](VertexId from, VertexId to, std::size_t length) {
        b.connect(from, to, length, b.label(from) + "~" + b.label(to));
    };
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t a = i + 1; a <= k; ++a)
            for (std::size_t j = 1; j <= nu; ++j)
                for (std::size_t bb = 1; bb <= nu; ++bb) {
                    if (bb < nu) link(cr(i, a, j, bb).v, cr(i, a, j, bb + 1).u, 2);
                    if (j > 1) link(cr(i, a, j, bb).y, cr(i, a, j - 1, bb).x, 2);
                }
    // Links between gadgets are 2ν long, not 2: with length 2 a path can enter a
    // neighbouring gadget, cut diagonally through its merged crossings and come
    // back ahead of its canonical route.
    const std::size_t bridge = 2 * nu;
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t a = i + 1; a < k; ++a)
            for (std::size_t j = 1; j <= nu; ++j) link(cr(i, a, j, nu).v, cr(i, a + 1, j, 1).u, bridge);
    for (std::size_t a = 1; a <= k; ++a)
        for (std::size_t i = 1; i + 1 < a; ++i)
            for (std::size_t bb = 1; bb <= nu; ++bb) link(cr(i, a, 1, bb).y, cr(i + 1, a, nu, bb).x, bridge);
    for (std::size_t i = 1; i + 1 < k; ++i)
        for (std::size_t bb = 1; bb <= nu; ++bb) link(cr(i, i + 1, 1, bb).y, cr(i + 1, i + 2, bb, 1).u, bridge);
    for (std::size_t i = 2; i <= k; ++i)
        for (std::size_t j = 1; j <= nu; ++j) link(S(i, j), cr(1, i, nu, j).x, 2 * nu);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 1; j <= nu; ++j) link(cr(i, k, j, nu).v, T(i, j), 2 * nu);
    if (k == 1) {
        for (std::size_t j = 1; j <= nu; ++j) link(S(1, j), T(1, j), 4 * nu - 2);
    } else {
        for (std::size_t j = 1; j <= nu; ++j) {
            link(S(1, j), cr(1, 2, j, 1).u, 2 * nu);
            link(cr(k - 1, k, 1, j).y, T(k, j), 2 * nu);
        }
    }

    GadgetInstance out =
        b.build(std::move(pairs), k, Provenance::multicolored_clique, "optimum = maximum multicolored clique size", false);

    const Graph& h = out.instance.graph();
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if (h.out_degree(static_cast<VertexId>(v)) > 3) throw GadgetError("vertex " + out.vertex_labels[v] + " has degree above three");
    const std::size_t x = height + 1;
    // every canonical path uses k-2 bridges
    const std::size_t expected = 2 * x + 4 * nu + 3 * (k - 1) * nu - 2 + (k >= 2 ? (k - 2) * (bridge - 2) : 0);
    for (std::size_t i = 0; i < k; ++i) {
        const TerminalPair& p = out.instance.pairs()[i];
        if (h.out_degree(p.source) != 1 || h.out_degree(p.target) != 1)
            throw GadgetError("terminal of degree other than one");
        auto c = detail::count_shortest_paths(h, p.source, p.target);
        if (!c || c->hops != expected || c->paths != nu)
            throw GadgetError("multicolored clique gadget: pair " + std::to_string(i + 1) + " has " +
                              (c ? std::to_string(c->paths) + " shortest paths of " + std::to_string(c->hops) : "no") +
                              " arcs, expected " + std::to_string(nu) + " of " + std::to_string(expected));
    }
    return out;
}

} // namespace mvdsp
