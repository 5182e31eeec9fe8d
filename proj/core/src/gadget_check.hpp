#pragma once

#include "mvdsp/graph.hpp"

#include <cstdint>
#include <optional>

namespace mvdsp::detail {

struct ShortestPathCount {
    std::size_t hops = 0;
    std::uint64_t paths = 0; ///< saturates at UINT64_MAX
};

/// Distance and number of shortest s-t paths in a unit-weight graph, or
/// nullopt if t is unreachable.
std::optional<ShortestPathCount> count_shortest_paths(const Graph& graph, VertexId s, VertexId t);

} // namespace mvdsp::detail
