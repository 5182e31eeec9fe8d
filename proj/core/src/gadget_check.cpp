#include "gadget_check.hpp"

#include <deque>
#include <limits>
#include <vector>

namespace mvdsp::detail {

std::optional<ShortestPathCount> count_shortest_paths(const Graph& graph, VertexId s, VertexId t) {
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::size_t> level(graph.vertex_count(), unseen);
    std::vector<std::uint64_t> count(graph.vertex_count(), 0);
    std::deque<VertexId> queue{s};
    level[static_cast<std::size_t>(s)] = 0;
    count[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        const auto lu = level[static_cast<std::size_t>(u)];
        const auto cu = count[static_cast<std::size_t>(u)];
        for (const Arc& a : graph.out_arcs(u)) {
            auto h = static_cast<std::size_t>(a.head);
            if (level[h] == unseen) {
                level[h] = lu + 1;
                queue.push_back(a.head);
            }
            if (level[h] == lu + 1) count[h] = count[h] > cap - cu ? cap : count[h] + cu;
        }
    }
    auto ti = static_cast<std::size_t>(t);
    if (level[ti] == unseen) return std::nullopt;
    return ShortestPathCount{level[ti], count[ti]};
}

} // namespace mvdsp::detail
