#pragma once

#include "mvdsp/graph.hpp"
#include "mvdsp/instance.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mvdsp {

/// Per-vertex mask: vertex v takes part in a search iff mask[v] != 0.
/// An empty span means every vertex is active.
using VertexMask = std::span<const std::uint8_t>;

/// (distance, arc count) label of a lexicographic shortest-path search.
/// Unreachable labels compare greater than every reachable one.
struct DistLabel {
    std::optional<Weight> dist;
    std::size_t hops = 0; ///< meaningful only when dist is set

    bool reachable() const noexcept { return dist.has_value(); }

    friend bool operator==(const DistLabel& a, const DistLabel& b) noexcept {
        if (a.reachable() != b.reachable()) return false;
        return !a.reachable() || (*a.dist == *b.dist && a.hops == b.hops);
    }
    friend std::strong_ordering operator<=>(const DistLabel& a, const DistLabel& b) noexcept {
        if (!a.reachable() || !b.reachable()) return b.reachable() <=> a.reachable();
        if (auto c = *a.dist <=> *b.dist; c != 0) return c;
        return a.hops <=> b.hops;
    }
};

/// Result of one lexicographic search: labels plus the predecessor pointers of
/// the search tree (-1 for the root and for unreachable vertices).
struct SearchTree {
    VertexId root = 0;
    std::vector<DistLabel> labels;
    std::vector<VertexId> parent;

    const DistLabel& operator[](VertexId v) const { return labels[static_cast<std::size_t>(v)]; }
    /// Tree path root -> v, or nullopt if v is unreachable.
    std::optional<Path> path_to(VertexId v) const;
};

enum class SearchDirection { forward, backward };

/// Dijkstra on (distance, arc count) labels compared lexicographically.
///
/// Every reachable vertex gets its exact distance from `source` and the fewest
/// arcs among minimum-weight paths. Ties between equal labels keep the first
/// relaxation in (settle order, head id) order, so the tree is deterministic.
/// A backward search follows arcs in reverse and yields distances *to* source.
SearchTree lex_dijkstra(const Graph& graph, VertexId source, VertexMask active = {},
                        SearchDirection direction = SearchDirection::forward);

/// A minimum-weight s-t path with the fewest arcs among those, or nullopt.
std::optional<Path> min_arc_shortest_path(const Graph& graph, VertexId s, VertexId t, VertexMask active = {});

/// Arcs (u,v) with dist(s,u) + w(u,v) + dist(v,t) = dist(s,t), as a directed
/// graph on the same vertex set. Throws mvdsp::Error if t is unreachable from s.
Graph shortest_path_dag(const Graph& graph, VertexId s, VertexId t);

/// All simple s-t paths of the shortest-path DAG in lexicographic vertex order.
/// Returns nullopt when there are more than `cap` of them.
std::optional<std::vector<Path>> enumerate_shortest_paths(const Graph& graph, VertexId s, VertexId t,
                                                          std::size_t cap);

/// Vertices lying on at least one shortest terminal path of a connectable pair.
std::vector<std::uint8_t> shortest_path_vertices(const Instance& instance);

} // namespace mvdsp
