#pragma once

#include "mvdsp/weight.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mvdsp {

using VertexId = std::int32_t;

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    Weight weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable weighted graph on vertices 0..n-1.
///
/// Every algorithm works on the directed arc form. An undirected graph keeps
/// both orientations of each edge with the same weight and remembers that it
/// was undirected so it can be written back edge by edge. Parallel arcs are
/// collapsed to the lightest one; self-loops are rejected.
class Graph {
public:
    Graph() = default;

    /// `edges` are read as arcs when `directed`, otherwise as undirected edges.
    /// Throws mvdsp::Error on out-of-range endpoints or self-loops.
    Graph(std::size_t vertex_count, bool directed, std::span<const Arc> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    bool directed() const noexcept { return directed_; }

    /// All arcs ordered by (tail, head).
    std::span<const Arc> arcs() const noexcept { return out_arcs_; }
    std::size_t arc_count() const noexcept { return out_arcs_.size(); }

    /// Arcs leaving `v`, ordered by head.
    std::span<const Arc> out_arcs(VertexId v) const;
    /// Arcs entering `v`, ordered by tail.
    std::span<const Arc> in_arcs(VertexId v) const;

    std::size_t out_degree(VertexId v) const { return out_arcs(v).size(); }
    std::size_t in_degree(VertexId v) const { return in_arcs(v).size(); }

    std::optional<Weight> arc_weight(VertexId tail, VertexId head) const;

    /// Edges as they would be written to a file: every arc when directed,
    /// otherwise one entry per undirected edge with tail < head.
    std::vector<Arc> edges() const;
    std::size_t edge_count() const noexcept { return directed_ ? out_arcs_.size() : out_arcs_.size() / 2; }

    bool is_unit_weight() const noexcept;
    bool contains(VertexId v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < vertex_count_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.directed_ == b.directed_ && a.out_arcs_ == b.out_arcs_;
    }

private:
    std::size_t vertex_count_ = 0;
    bool directed_ = false;
    std::vector<Arc> out_arcs_;
    std::vector<std::size_t> out_offsets_;
    std::vector<Arc> in_arcs_;
    std::vector<std::size_t> in_offsets_;
};

} // namespace mvdsp
