#pragma once

#include "mvdsp/instance.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mvdsp {

enum class Provenance { multicolored_clique, clique, sat3_layered, merged, plain };

std::string_view to_string(Provenance provenance) noexcept;

/// A generated instance together with the correspondence it is built to
/// satisfy and a readable name for every vertex.
struct GadgetInstance {
    Instance instance;
    Provenance provenance = Provenance::plain;
    std::string claim;
    std::vector<std::string> vertex_labels; ///< indexed by vertex id, all distinct
};

/// Wraps an arbitrary instance with labels "v<id>".
GadgetInstance as_gadget(Instance instance);

/// Accumulates labelled vertices and unit-weight edges; vertex ids follow
/// creation order.
class GadgetBuilder {
public:
    explicit GadgetBuilder(bool directed = false) : directed_(directed) {}

    VertexId add_vertex(std::string label, std::size_t layer = 0);
    void add_edge(VertexId u, VertexId v, Weight weight = Weight::one());
    /// Joins u and v by a path of `length` unit edges through fresh vertices
    /// labelled "<label>#1", "<label>#2", ...
    void connect(VertexId u, VertexId v, std::size_t length, const std::string& label);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::string& label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }
    std::size_t layer(VertexId v) const { return layers_[static_cast<std::size_t>(v)]; }
    void set_layer(VertexId v, std::size_t layer) { layers_[static_cast<std::size_t>(v)] = layer; }

    /// Throws GadgetError on duplicate labels. Layers are 1-based; with
    /// `layered` every vertex must have one.
    GadgetInstance build(std::vector<TerminalPair> pairs, std::size_t target, Provenance provenance, std::string claim,
                         bool layered) const;

private:
    bool directed_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> layers_;
    std::vector<Arc> edges_;
};

/// Input graph for the multicolored construction: vertex c*nu + j is the j-th
/// vertex (0-based) of color class c.
struct ColoredGraph {
    Graph graph;
    std::size_t colors = 0;
    std::size_t class_size = 0;
};

/// Multicolored clique -> MVDSP with maximum degree three and degree-one
/// terminals. Color class i becomes pair (s_i, t_i) with one canonical path
/// per class vertex; canonical paths of two vertices are disjoint iff the
/// vertices are adjacent. Optimum = largest multicolored clique.
GadgetInstance gen_multicolored_clique(const ColoredGraph& input);

/// Clique -> MVDSP: one pair per input vertex, each with a unique shortest
/// path, two of them disjoint iff the vertices are adjacent. Optimum = clique
/// number; vertices + edges stay within 3N².
GadgetInstance gen_clique(const Graph& input);

/// CNF formula, literals as signed 1-based variable indices (DIMACS style).
struct CnfFormula {
    std::size_t variables = 0;
    std::vector<std::vector<int>> clauses;
};

/// 3-SAT -> layered vertex-disjoint shortest paths. A spine pair (u_0, u_n)
/// picks one of two chains per variable; each clause pair has one route per
/// literal touching the chain of the opposite value. All m+1 pairs can be
/// connected iff the formula is satisfiable. Layers: n(m+1)+1, so every
/// terminal distance is n(m+1). Rejects an empty formula, clauses with more
/// than three literals and clauses that repeat a variable.
GadgetInstance gen_sat3_layered(const CnfFormula& formula);

/// Merges two λ-layered instances with k pairs each into one (λ+2k)-layered
/// instance with k pairs that can route all pairs iff one of the inputs can.
GadgetInstance merge_layered(const GadgetInstance& a, const GadgetInstance& b);

/// Same-shape layered instance that cannot route all of its pairs.
GadgetInstance trivial_no_instance(std::size_t layers, std::size_t pairs, bool directed = false);

/// OR-composition of same-shape layered instances: pad to a power of two with
/// trivial no-instances, then merge pairwise until one instance remains.
GadgetInstance cross_compose(const std::vector<GadgetInstance>& instances);

/// Structural layering test used by the merge: partition, consecutive-layer
/// arcs and terminal placement. Distances are not checked.
bool is_structurally_layered(const Instance& instance);

} // namespace mvdsp
