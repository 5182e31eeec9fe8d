#include "mvdsp/generators.hpp"

#include "mvdsp/error.hpp"

#include <unordered_set>

namespace mvdsp {

std::string_view to_string(Provenance provenance) noexcept {
    switch (provenance) {
    case Provenance::multicolored_clique: return "multicolored_clique";
    case Provenance::clique: return "clique";
    case Provenance::sat3_layered: return "sat3_layered";
    case Provenance::merged: return "merged";
    case Provenance::plain: return "plain";
    }
    return "unknown";
}

GadgetInstance as_gadget(Instance instance) {
    GadgetInstance g;
    g.vertex_labels.reserve(instance.vertex_count());
    for (std::size_t v = 0; v < instance.vertex_count(); ++v) g.vertex_labels.push_back("v" + std::to_string(v));
    g.instance = std::move(instance);
    g.provenance = Provenance::plain;
    g.claim = "none";
    return g;
}

VertexId GadgetBuilder::add_vertex(std::string label, std::size_t layer) {
    labels_.push_back(std::move(label));
    layers_.push_back(layer);
    return static_cast<VertexId>(labels_.size() - 1);
}

void GadgetBuilder::add_edge(VertexId u, VertexId v, Weight weight) { edges_.push_back(Arc{u, v, weight}); }

void GadgetBuilder::connect(VertexId u, VertexId v, std::size_t length, const std::string& label) {
    if (length == 0) throw GadgetError("connector '" + label + "' needs positive length");
    VertexId prev = u;
    for (std::size_t i = 1; i < length; ++i) {
        VertexId mid = add_vertex(label + "#" + std::to_string(i));
        add_edge(prev, mid);
        prev = mid;
    }
    add_edge(prev, v);
}

GadgetInstance GadgetBuilder::build(std::vector<TerminalPair> pairs, std::size_t target, Provenance provenance,
                                    std::string claim, bool layered) const {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw GadgetError("duplicate vertex label '" + l + "'");

    std::optional<Layering> layering;
    if (layered) {
        std::size_t count = 0;
        for (std::size_t v = 0; v < layers_.size(); ++v) {
            if (layers_[v] == 0) throw GadgetError("vertex '" + labels_[v] + "' has no layer");
            count = std::max(count, layers_[v]);
        }
        layering.emplace(count);
        for (std::size_t v = 0; v < layers_.size(); ++v)
            (*layering)[layers_[v] - 1].push_back(static_cast<VertexId>(v));
    }

    GadgetInstance g;
    g.instance = Instance(Graph(labels_.size(), directed_, edges_), std::move(pairs), target, std::move(layering));
    g.provenance = provenance;
    g.claim = std::move(claim);
    g.vertex_labels = labels_;
    return g;
}

} // namespace mvdsp
