#include "mvdsp/generators.hpp"

#include "mvdsp/error.hpp"
#include "mvdsp/verify.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

namespace mvdsp {

bool is_structurally_layered(const Instance& instance) {
    if (!instance.layering()) return false;
    const VerifyReport r = verify_layering(instance);
    return std::all_of(r.violations.begin(), r.violations.end(),
                       [](const Violation& v) { return v.kind == ViolationKind::layer_distance; });
}

namespace {

struct Shape {
    std::size_t layers = 0;
    std::size_t pairs = 0;
    bool directed = false;
};

Shape shape_of(const GadgetInstance& g, const char* what) {
    const Instance& in = g.instance;
    if (!is_structurally_layered(in)) throw GadgetError(std::string(what) + " is not a layered instance");
    if (!in.graph().is_unit_weight()) throw GadgetError(std::string(what) + " has non-unit weights");
    if (in.pair_count() == 0) throw GadgetError(std::string(what) + " has no terminal pairs");
    std::unordered_set<VertexId> terminals;
    for (const auto& p : in.pairs())
        if (!terminals.insert(p.source).second || !terminals.insert(p.target).second)
            throw GadgetError(std::string(what) + " shares a terminal between pairs");
    if (g.vertex_labels.size() != in.vertex_count()) throw GadgetError(std::string(what) + " has a wrong label count");
    return {in.layering()->size(), in.pair_count(), in.graph().directed()};
}

std::vector<std::size_t> layer_of(const Instance& in) {
    std::vector<std::size_t> layer(in.vertex_count(), 0);
    const Layering& ls = *in.layering();
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (VertexId v : ls[i]) layer[static_cast<std::size_t>(v)] = i + 1;
    return layer;
}

// Copies `g` into the builder shifted down by `shift` layers; returns the new id of
// each old vertex.
std::vector<VertexId> embed(GadgetBuilder& b, const GadgetInstance& g, const std::string& prefix, std::size_t shift) {
    const auto layer = layer_of(g.instance);
    std::vector<VertexId> id(g.instance.vertex_count());
    for (std::size_t v = 0; v < id.size(); ++v) id[v] = b.add_vertex(prefix + g.vertex_labels[v], layer[v] + shift);
    for (const Arc& a : g.instance.graph().edges())
        b.add_edge(id[static_cast<std::size_t>(a.tail)], id[static_cast<std::size_t>(a.head)]);
    return id;
}

} // namespace

GadgetInstance merge_layered(const GadgetInstance& a, const GadgetInstance& b) {
    const Shape sa = shape_of(a, "first instance");
    const Shape sb = shape_of(b, "second instance");
    if (sa.layers != sb.layers || sa.pairs != sb.pairs || sa.directed != sb.directed)
        throw GadgetError("merged instances differ in layer count, pair count or directedness");
    const std::size_t k = sa.pairs;
    const std::size_t lambda = sa.layers;

    GadgetBuilder out(sa.directed);
    const auto ia = embed(out, a, "A.", k);
    const auto ib = embed(out, b, "B.", k);

    // Header row d has d + k vertices at layer d + 1; row 0 holds the new
    // sources, row k the sources of A (x < k) and B (x >= k). Footer row e has
    // e + k vertices at layer lambda + 2k - e, mirrored for the targets.
    std::vector<std::vector<VertexId>> head(k + 1), foot(k + 1);
    for (std::size_t x = 0; x < 2 * k; ++x) {
        const std::size_t p = x < k ? x : x - k;
        const auto& ids = x < k ? ia : ib;
        const auto& pairs = x < k ? a.instance.pairs() : b.instance.pairs();
        head[k].push_back(ids[static_cast<std::size_t>(pairs[p].source)]);
        const std::size_t q = x < k ? k - 1 - x : 2 * k - 1 - x;
        foot[k].push_back(ids[static_cast<std::size_t>(pairs[q].target)]);
    }
    for (std::size_t d = 0; d < k; ++d)
        for (std::size_t x = 0; x < d + k; ++x)
            head[d].push_back(out.add_vertex("h[" + std::to_string(d) + "," + std::to_string(x) + "]", d + 1));
    for (std::size_t e = 0; e < k; ++e)
        for (std::size_t x = 0; x < e + k; ++x)
            foot[e].push_back(
                out.add_vertex("f[" + std::to_string(e) + "," + std::to_string(x) + "]", lambda + 2 * k - e));

    for (std::size_t d = 0; d < k; ++d) {
        for (std::size_t x = 0; x < k; ++x) out.add_edge(head[d][x], head[d + 1][x]);
        for (std::size_t x = d; x < d + k; ++x) out.add_edge(head[d][x], head[d + 1][x + 1]);
        for (std::size_t x = 0; x < k; ++x) out.add_edge(foot[d + 1][x], foot[d][x]);
        for (std::size_t x = d; x < d + k; ++x) out.add_edge(foot[d + 1][x + 1], foot[d][x]);
    }

    std::vector<TerminalPair> pairs;
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({head[0][i], foot[0][k - 1 - i]});
    return out.build(std::move(pairs), k, Provenance::merged,
                     "all pairs connectable iff all pairs are connectable in one of the merged instances", true);
}

GadgetInstance trivial_no_instance(std::size_t layers, std::size_t pairs, bool directed) {
    if (layers == 0 || pairs == 0) throw GadgetError("trivial instance needs at least one layer and one pair");
    GadgetBuilder b(directed);
    std::vector<TerminalPair> tp;
    for (std::size_t i = 1; i <= pairs; ++i) {
        VertexId s = b.add_vertex("s" + std::to_string(i), 1);
        VertexId t = b.add_vertex("t" + std::to_string(i), layers);
        tp.push_back({s, t});
    }
    if (pairs >= 2 && layers >= 3) {
        // Every pair must pass one shared chain through layers 2..λ-1.
        std::vector<VertexId> chain;
        for (std::size_t l = 2; l < layers; ++l) chain.push_back(b.add_vertex("c" + std::to_string(l), l));
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) b.add_edge(chain[i], chain[i + 1]);
        for (const auto& p : tp) {
            b.add_edge(p.source, chain.front());
            b.add_edge(chain.back(), p.target);
        }
    } else {
        // No arcs at all: no pair is connectable (λ = 1 puts s and t in the same layer).
        for (std::size_t l = 2; l < layers; ++l) b.add_vertex("c" + std::to_string(l), l);
    }
    return b.build(std::move(tp), pairs, Provenance::plain, "no-instance", true);
}

GadgetInstance cross_compose(const std::vector<GadgetInstance>& instances) {
    if (instances.empty()) throw GadgetError("nothing to compose");
    const Shape first = shape_of(instances.front(), "instance 1");
    for (std::size_t i = 1; i < instances.size(); ++i) {
        const Shape s = shape_of(instances[i], ("instance " + std::to_string(i + 1)).c_str());
        if (s.layers != first.layers || s.pairs != first.pairs || s.directed != first.directed)
            throw GadgetError("composed instances differ in layer count, pair count or directedness");
    }
    std::vector<GadgetInstance> round = instances;
    std::size_t size = 1;
    while (size < round.size()) size *= 2;
    while (round.size() < size) round.push_back(trivial_no_instance(first.layers, first.pairs, first.directed));
    while (round.size() > 1) {
        std::vector<GadgetInstance> next;
        for (std::size_t i = 0; i < round.size(); i += 2) next.push_back(merge_layered(round[i], round[i + 1]));
        round = std::move(next);
    }
    return std::move(round.front());
}

} // namespace mvdsp
