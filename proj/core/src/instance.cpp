#include "mvdsp/instance.hpp"

#include "mvdsp/error.hpp"

#include <algorithm>
#include <string>

namespace mvdsp {

Instance::Instance(Graph graph, std::vector<TerminalPair> pairs, std::size_t target, std::optional<Layering> layering)
    : graph_(std::move(graph)), pairs_(std::move(pairs)), target_(target), layering_(std::move(layering)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const auto& [s, t] = pairs_[i];
        if (!graph_.contains(s) || !graph_.contains(t))
            throw Error("terminal pair " + std::to_string(i) + " has an endpoint out of range");
        if (s == t) throw Error("terminal pair " + std::to_string(i) + " has s == t");
    }
    if (target_ > pairs_.size())
        throw Error("target p = " + std::to_string(target_) + " exceeds the number of pairs k = " +
                    std::to_string(pairs_.size()));
    if (layering_) {
        std::vector<char> seen(graph_.vertex_count(), 0);
        for (std::size_t layer = 0; layer < layering_->size(); ++layer) {
            for (VertexId v : (*layering_)[layer]) {
                if (!graph_.contains(v))
                    throw Error("layer " + std::to_string(layer + 1) + " lists vertex out of range");
                if (seen[static_cast<std::size_t>(v)]++)
                    throw Error("vertex " + std::to_string(v) + " listed in more than one layer slot");
            }
            std::sort((*layering_)[layer].begin(), (*layering_)[layer].end());
        }
    }
}

Instance Instance::with_target(std::size_t target) const {
    return Instance(graph_, pairs_, target, layering_);
}

std::optional<Weight> path_weight(const Graph& graph, const Path& path) {
    if (path.vertices.empty()) return std::nullopt;
    std::vector<VertexId> sorted = path.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    if (!graph.contains(path.vertices.front())) return std::nullopt;
    Weight total;
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        auto w = graph.arc_weight(path.vertices[i - 1], path.vertices[i]);
        if (!w) return std::nullopt;
        total += *w;
    }
    return total;
}

std::size_t Solution::total_arcs() const noexcept {
    std::size_t total = 0;
    for (const auto& e : entries) total += e.path.arc_count();
    return total;
}

void Solution::normalize() {
    std::sort(entries.begin(), entries.end(),
              [](const SolutionEntry& a, const SolutionEntry& b) { return a.pair_index < b.pair_index; });
}

} // namespace mvdsp
