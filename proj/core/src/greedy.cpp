#include "mvdsp/greedy.hpp"

#include "mvdsp/shortest_paths.hpp"

#include <limits>

namespace mvdsp {

SolveReport greedy_approx(const Instance& instance) {
    const Graph& graph = instance.graph();
    const auto& pairs = instance.pairs();

    std::vector<std::optional<Weight>> original(pairs.size());
    std::vector<char> alive_pair(pairs.size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        DistLabel label = lex_dijkstra(graph, pairs[i].source)[pairs[i].target];
        original[i] = label.dist;
        alive_pair[i] = label.reachable();
    }

    std::vector<std::uint8_t> alive(graph.vertex_count(), 1);
    SolveReport report;
    report.mode = Algorithm::greedy;

    while (true) {
        std::size_t best = pairs.size();
        std::size_t best_hops = std::numeric_limits<std::size_t>::max();
        std::optional<Path> best_path;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!alive_pair[i]) continue;
            const auto [s, t] = pairs[i];
            if (!alive[static_cast<std::size_t>(s)] || !alive[static_cast<std::size_t>(t)]) {
                alive_pair[i] = 0;
                continue;
            }
            SearchTree tree = lex_dijkstra(graph, s, alive);
            const DistLabel& label = tree[t];
            if (!label.reachable() || *label.dist != *original[i]) {
                alive_pair[i] = 0;
                continue;
            }
            ++report.iterations;
            if (label.hops < best_hops) {
                best = i;
                best_hops = label.hops;
                best_path = tree.path_to(t);
            }
        }
        if (best == pairs.size()) break;

        for (VertexId v : best_path->vertices) alive[static_cast<std::size_t>(v)] = 0;
        alive_pair[best] = 0;
        report.solution.entries.push_back({best, std::move(*best_path)});
    }

    report.solution.normalize();
    report.status = report.solution.size() >= instance.target() ? SolveStatus::found : SolveStatus::not_found;
    report.optimal = false;
    report.ell_used = report.solution.size() == 0 ? graph.vertex_count() : report.solution.total_arcs();
    return report;
}

} // namespace mvdsp
