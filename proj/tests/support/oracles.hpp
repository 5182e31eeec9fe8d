#pragma once

// Reference implementations used only to check the library. Each one is the
// most direct reading of its definition, with no shared code from core/ except
// the data types and Weight arithmetic.

#include "mvdsp/generators.hpp"
#include "mvdsp/instance.hpp"
#include "mvdsp/coloring.hpp"

#include <optional>
#include <vector>

namespace oracle {

using mvdsp::Graph;
using mvdsp::Instance;
using mvdsp::Path;
using mvdsp::VertexId;
using mvdsp::Weight;

struct WeightedPath {
    Path path;
    Weight weight;
};

/// Every simple s-t path, by depth-first search (s == t gives the one-vertex path).
std::vector<WeightedPath> all_simple_paths(const Graph& g, VertexId s, VertexId t);

/// (minimum weight, fewest arcs at that weight) over all simple s-t paths.
struct Label {
    std::optional<Weight> dist;
    std::size_t hops = 0;
};
Label best_label(const Graph& g, VertexId s, VertexId t);

/// Shortest s-t paths by exhaustive enumeration.
std::vector<Path> shortest_paths(const Graph& g, VertexId s, VertexId t);

struct Optimum {
    std::size_t size = 0;
    std::size_t min_arcs = 0; ///< fewest total arcs among maximum solutions
};
/// Maximum number of vertex-disjoint terminal shortest paths, by trying every
/// combination of enumerated paths.
Optimum optimum(const Instance& instance);

/// f[X, 1] read literally: build G[W] for W = vertices colored in X, run a
/// textbook Dijkstra on (weight, arcs) there, and keep pairs whose distance in
/// G[W] still equals the distance in G. Infinite = nullopt.
std::optional<std::size_t> base_case(const Instance& instance, const mvdsp::Coloring& coloring,
                                     mvdsp::ColorSet colors);

std::size_t max_clique(const Graph& g);

bool satisfiable(const mvdsp::CnfFormula& f);

} // namespace oracle
