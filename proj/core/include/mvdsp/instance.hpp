#pragma once

#include "mvdsp/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mvdsp {

struct TerminalPair {
    VertexId source = 0;
    VertexId target = 0;

    friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

/// Layers V_1..V_λ, stored 0-based: layers[0] is V_1. Instance keeps each layer sorted.
using Layering = std::vector<std::vector<VertexId>>;

/// A Maximum Vertex-Disjoint Shortest Paths input: graph, terminal pairs and
/// the target number of pairs to connect.
///
/// The constructor enforces only the local invariants (ids in range, s != t,
/// target <= k, every layer vertex in range and listed once). Whether a
/// declared layering is a valid layered instance is a question for
/// verify_layering().
class Instance {
public:
    Instance() = default;
    Instance(Graph graph, std::vector<TerminalPair> pairs, std::size_t target,
             std::optional<Layering> layering = std::nullopt);

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<TerminalPair>& pairs() const noexcept { return pairs_; }
    std::size_t pair_count() const noexcept { return pairs_.size(); }
    std::size_t target() const noexcept { return target_; }
    const std::optional<Layering>& layering() const noexcept { return layering_; }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

    /// Same instance with target p replaced; throws if p > k.
    Instance with_target(std::size_t target) const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Graph graph_;
    std::vector<TerminalPair> pairs_;
    std::size_t target_ = 0;
    std::optional<Layering> layering_;
};

/// A simple path given by its vertex sequence.
struct Path {
    std::vector<VertexId> vertices;

    std::size_t arc_count() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool empty() const noexcept { return vertices.empty(); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Sum of arc weights along `path`, or nullopt if some consecutive pair is not an arc
/// or a vertex repeats.
std::optional<Weight> path_weight(const Graph& graph, const Path& path);

struct SolutionEntry {
    std::size_t pair_index = 0;
    Path path;

    friend bool operator==(const SolutionEntry&, const SolutionEntry&) = default;
};

/// Paths claimed to be pairwise vertex-disjoint shortest terminal paths.
/// Nothing here is trusted; see verify_solution().
struct Solution {
    std::vector<SolutionEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
    std::size_t total_arcs() const noexcept;
    /// Entries ordered by pair index.
    void normalize();

    friend bool operator==(const Solution&, const Solution&) = default;
};

} // namespace mvdsp
