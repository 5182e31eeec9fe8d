#include "mvdsp/verify.hpp"

#include "mvdsp/shortest_paths.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mvdsp {

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
    case ViolationKind::not_a_path: return "not_a_path";
    case ViolationKind::wrong_endpoints: return "wrong_endpoints";
    case ViolationKind::not_shortest: return "not_shortest";
    case ViolationKind::vertex_overlap: return "vertex_overlap";
    case ViolationKind::duplicate_pair: return "duplicate_pair";
    case ViolationKind::no_layering: return "no_layering";
    case ViolationKind::layer_partition: return "layer_partition";
    case ViolationKind::layer_arc: return "layer_arc";
    case ViolationKind::terminal_layer: return "terminal_layer";
    case ViolationKind::layer_distance: return "layer_distance";
    }
    return "unknown";
}

bool VerifyReport::has(ViolationKind kind) const noexcept {
    return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

VerifyReport verify_solution(const Instance& instance, const Solution& solution) {
    const Graph& graph = instance.graph();
    VerifyReport report;
    report.size = solution.size();
    report.total_arcs = solution.total_arcs();
    auto flag = [&](ViolationKind kind, std::string detail) { report.violations.push_back({kind, std::move(detail)}); };

    std::vector<std::size_t> seen_pairs;
    std::map<VertexId, std::size_t> owner; // vertex -> entry position
    for (std::size_t e = 0; e < solution.entries.size(); ++e) {
        const SolutionEntry& entry = solution.entries[e];
        const std::string where = "entry " + std::to_string(e) + " (pair " + std::to_string(entry.pair_index) + ")";

        if (std::find(seen_pairs.begin(), seen_pairs.end(), entry.pair_index) != seen_pairs.end())
            flag(ViolationKind::duplicate_pair, where + " repeats a pair index");
        seen_pairs.push_back(entry.pair_index);

        bool in_range = std::all_of(entry.path.vertices.begin(), entry.path.vertices.end(),
                                    [&](VertexId v) { return graph.contains(v); });
        std::optional<Weight> weight = in_range ? path_weight(graph, entry.path) : std::nullopt;
        if (!weight) flag(ViolationKind::not_a_path, where + " is not a simple path of the graph");

        if (entry.pair_index >= instance.pair_count()) {
            flag(ViolationKind::wrong_endpoints, where + " names a pair index out of range");
        } else {
            const TerminalPair& pair = instance.pairs()[entry.pair_index];
            if (entry.path.empty() || entry.path.front() != pair.source || entry.path.back() != pair.target) {
                flag(ViolationKind::wrong_endpoints, where + " does not run from s to t");
            } else if (weight) {
                DistLabel label = lex_dijkstra(graph, pair.source)[pair.target];
                if (!label.reachable() || *label.dist != *weight)
                    flag(ViolationKind::not_shortest, where + " has weight " + weight->to_string() + ", distance is " +
                                                          (label.reachable() ? label.dist->to_string() : "inf"));
            }
        }

        if (!in_range) continue;
        for (VertexId v : entry.path.vertices) {
            auto [it, inserted] = owner.emplace(v, e);
            if (!inserted && it->second != e)
                flag(ViolationKind::vertex_overlap, "vertex " + std::to_string(v) + " shared by entries " +
                                                        std::to_string(it->second) + " and " + std::to_string(e));
        }
    }
    return report;
}

VerifyReport verify_layering(const Instance& instance) {
    VerifyReport report;
    auto flag = [&](ViolationKind kind, std::string detail) { report.violations.push_back({kind, std::move(detail)}); };
    if (!instance.layering()) {
        flag(ViolationKind::no_layering, "instance declares no layering");
        return report;
    }
    const Layering& layers = *instance.layering();
    const Graph& graph = instance.graph();
    const std::size_t n = graph.vertex_count();

    std::vector<long> layer_of(n, -1);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (layers[i].empty()) flag(ViolationKind::layer_partition, "layer " + std::to_string(i + 1) + " is empty");
        for (VertexId v : layers[i]) {
            if (!graph.contains(v)) {
                flag(ViolationKind::layer_partition, "vertex " + std::to_string(v) + " out of range");
                continue;
            }
            if (layer_of[static_cast<std::size_t>(v)] != -1)
                flag(ViolationKind::layer_partition, "vertex " + std::to_string(v) + " in two layers");
            layer_of[static_cast<std::size_t>(v)] = static_cast<long>(i);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (layer_of[v] == -1) flag(ViolationKind::layer_partition, "vertex " + std::to_string(v) + " in no layer");

    for (const Arc& arc : graph.arcs()) {
        long a = layer_of[static_cast<std::size_t>(arc.tail)];
        long b = layer_of[static_cast<std::size_t>(arc.head)];
        if (a == -1 || b == -1) continue;
        if (a - b != 1 && b - a != 1)
            flag(ViolationKind::layer_arc, "arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head) +
                                               " joins layers " + std::to_string(a + 1) + " and " +
                                               std::to_string(b + 1));
    }

    const long last = static_cast<long>(layers.size()) - 1;
    const Weight expected(layers.empty() ? 0 : static_cast<std::int64_t>(layers.size() - 1));
    for (std::size_t i = 0; i < instance.pair_count(); ++i) {
        const TerminalPair& pair = instance.pairs()[i];
        const std::string name = "pair " + std::to_string(i);
        if (layer_of[static_cast<std::size_t>(pair.source)] != 0)
            flag(ViolationKind::terminal_layer, name + ": source not in the first layer");
        if (layer_of[static_cast<std::size_t>(pair.target)] != last)
            flag(ViolationKind::terminal_layer, name + ": target not in the last layer");
        DistLabel label = lex_dijkstra(graph, pair.source)[pair.target];
        if (!label.reachable() || *label.dist != expected)
            flag(ViolationKind::layer_distance,
                 name + ": distance " + (label.reachable() ? label.dist->to_string() : std::string("inf")) +
                     " != " + expected.to_string());
    }
    return report;
}

} // namespace mvdsp
