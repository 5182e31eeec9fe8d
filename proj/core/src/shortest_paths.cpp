#include "mvdsp/shortest_paths.hpp"

#include "mvdsp/error.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <tuple>

namespace mvdsp {

namespace {

struct QueueEntry {
    Weight dist;
    std::size_t hops;
    VertexId vertex;

    friend bool operator>(const QueueEntry& a, const QueueEntry& b) {
        if (auto c = a.dist <=> b.dist; c != 0) return c > 0;
        return std::tie(a.hops, a.vertex) > std::tie(b.hops, b.vertex);
    }
};

bool is_active(VertexMask active, VertexId v) {
    return active.empty() || active[static_cast<std::size_t>(v)] != 0;
}

} // namespace

std::optional<Path> SearchTree::path_to(VertexId v) const {
    if (!labels[static_cast<std::size_t>(v)].reachable()) return std::nullopt;
    Path path;
    for (VertexId cur = v; cur != -1; cur = parent[static_cast<std::size_t>(cur)]) path.vertices.push_back(cur);
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

SearchTree lex_dijkstra(const Graph& graph, VertexId source, VertexMask active, SearchDirection direction) {
    const std::size_t n = graph.vertex_count();
    SearchTree tree;
    tree.root = source;
    tree.labels.assign(n, DistLabel{});
    tree.parent.assign(n, -1);
    if (!graph.contains(source) || !is_active(active, source)) return tree;

    std::vector<char> settled(n, 0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    tree.labels[static_cast<std::size_t>(source)] = DistLabel{Weight::zero(), 0};
    queue.push({Weight::zero(), 0, source});

    while (!queue.empty()) {
        QueueEntry top = queue.top();
        queue.pop();
        auto u = static_cast<std::size_t>(top.vertex);
        if (settled[u]) continue;
        settled[u] = 1;

        auto arcs = direction == SearchDirection::forward ? graph.out_arcs(top.vertex) : graph.in_arcs(top.vertex);
        for (const Arc& arc : arcs) {
            VertexId next = direction == SearchDirection::forward ? arc.head : arc.tail;
            auto v = static_cast<std::size_t>(next);
            if (settled[v] || !is_active(active, next)) continue;
            DistLabel candidate{top.dist + arc.weight, top.hops + 1};
            if (candidate < tree.labels[v]) {
                tree.labels[v] = candidate;
                tree.parent[v] = top.vertex;
                queue.push({*candidate.dist, candidate.hops, next});
            }
        }
    }
    return tree;
}

std::optional<Path> min_arc_shortest_path(const Graph& graph, VertexId s, VertexId t, VertexMask active) {
    if (!graph.contains(t) || !is_active(active, t)) return std::nullopt;
    return lex_dijkstra(graph, s, active).path_to(t);
}

Graph shortest_path_dag(const Graph& graph, VertexId s, VertexId t) {
    SearchTree from_s = lex_dijkstra(graph, s);
    if (!graph.contains(t) || !from_s[t].reachable())
        throw Error("vertex " + std::to_string(t) + " is unreachable from " + std::to_string(s));
    SearchTree to_t = lex_dijkstra(graph, t, {}, SearchDirection::backward);
    const Weight total = *from_s[t].dist;

    std::vector<Arc> dag;
    for (const Arc& arc : graph.arcs()) {
        const DistLabel& a = from_s[arc.tail];
        const DistLabel& b = to_t[arc.head];
        if (a.reachable() && b.reachable() && *a.dist + arc.weight + *b.dist == total) dag.push_back(arc);
    }
    return Graph(graph.vertex_count(), true, dag);
}

std::optional<std::vector<Path>> enumerate_shortest_paths(const Graph& graph, VertexId s, VertexId t,
                                                          std::size_t cap) {
    std::vector<Path> paths;
    if (!graph.contains(s) || !graph.contains(t) || !lex_dijkstra(graph, s)[t].reachable()) return paths;
    const Graph dag = shortest_path_dag(graph, s, t);

    // Zero-weight arcs can close cycles inside the DAG; the on-path flags keep paths simple.
    std::vector<char> on_path(graph.vertex_count(), 0);
    std::vector<VertexId> stack{s};
    on_path[static_cast<std::size_t>(s)] = 1;
    bool overflow = false;

    std::function<void(VertexId)> extend = [&](VertexId u) {
        if (overflow) return;
        if (u == t) {
            if (paths.size() == cap) {
                overflow = true;
                return;
            }
            paths.push_back(Path{stack});
            return;
        }
        for (const Arc& arc : dag.out_arcs(u)) {
            auto v = static_cast<std::size_t>(arc.head);
            if (on_path[v]) continue;
            on_path[v] = 1;
            stack.push_back(arc.head);
            extend(arc.head);
            stack.pop_back();
            on_path[v] = 0;
            if (overflow) return;
        }
    };
    extend(s);
    if (overflow) return std::nullopt;
    return paths;
}

std::vector<std::uint8_t> shortest_path_vertices(const Instance& instance) {
    const Graph& graph = instance.graph();
    std::vector<std::uint8_t> relevant(graph.vertex_count(), 0);
    for (const TerminalPair& pair : instance.pairs()) {
        SearchTree from_s = lex_dijkstra(graph, pair.source);
        if (!from_s[pair.target].reachable()) continue;
        SearchTree to_t = lex_dijkstra(graph, pair.target, {}, SearchDirection::backward);
        const Weight total = *from_s[pair.target].dist;
        for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
            const DistLabel& a = from_s.labels[v];
            const DistLabel& b = to_t.labels[v];
            if (a.reachable() && b.reachable() && *a.dist + *b.dist == total) relevant[v] = 1;
        }
    }
    return relevant;
}

} // namespace mvdsp
