#include "mvdsp/graph.hpp"

#include "mvdsp/error.hpp"

#include <algorithm>
#include <string>

namespace mvdsp {

namespace {

std::vector<std::size_t> offsets_by(std::span<const Arc> arcs, std::size_t n, VertexId Arc::*key) {
    std::vector<std::size_t> offsets(n + 1, 0);
    for (const Arc& a : arcs) ++offsets[static_cast<std::size_t>(a.*key) + 1];
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    return offsets;
}

} // namespace

Graph::Graph(std::size_t vertex_count, bool directed, std::span<const Arc> edges)
    : vertex_count_(vertex_count), directed_(directed) {
    out_arcs_.reserve(directed ? edges.size() : 2 * edges.size());
    for (const Arc& e : edges) {
        if (!contains(e.tail) || !contains(e.head))
            throw Error("arc endpoint out of range: " + std::to_string(e.tail) + " -> " + std::to_string(e.head));
        if (e.tail == e.head)
            throw Error("self-loop at vertex " + std::to_string(e.tail));
        out_arcs_.push_back(e);
        if (!directed) out_arcs_.push_back(Arc{e.head, e.tail, e.weight});
    }

    std::sort(out_arcs_.begin(), out_arcs_.end(), [](const Arc& a, const Arc& b) {
        if (a.tail != b.tail) return a.tail < b.tail;
        if (a.head != b.head) return a.head < b.head;
        return a.weight < b.weight;
    });
    // Parallel arcs: the lightest sorts first and is the one kept.
    out_arcs_.erase(std::unique(out_arcs_.begin(), out_arcs_.end(),
                                [](const Arc& a, const Arc& b) { return a.tail == b.tail && a.head == b.head; }),
                    out_arcs_.end());
    out_offsets_ = offsets_by(out_arcs_, vertex_count_, &Arc::tail);

    in_arcs_ = out_arcs_;
    std::sort(in_arcs_.begin(), in_arcs_.end(), [](const Arc& a, const Arc& b) {
        if (a.head != b.head) return a.head < b.head;
        return a.tail < b.tail;
    });
    in_offsets_ = offsets_by(in_arcs_, vertex_count_, &Arc::head);
}

std::span<const Arc> Graph::out_arcs(VertexId v) const {
    auto i = static_cast<std::size_t>(v);
    return std::span<const Arc>(out_arcs_).subspan(out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]);
}

std::span<const Arc> Graph::in_arcs(VertexId v) const {
    auto i = static_cast<std::size_t>(v);
    return std::span<const Arc>(in_arcs_).subspan(in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]);
}

std::optional<Weight> Graph::arc_weight(VertexId tail, VertexId head) const {
    if (!contains(tail) || !contains(head)) return std::nullopt;
    auto out = out_arcs(tail);
    auto it = std::lower_bound(out.begin(), out.end(), head, [](const Arc& a, VertexId h) { return a.head < h; });
    if (it == out.end() || it->head != head) return std::nullopt;
    return it->weight;
}

std::vector<Arc> Graph::edges() const {
    if (directed_) return out_arcs_;
    std::vector<Arc> result;
    result.reserve(out_arcs_.size() / 2);
    for (const Arc& a : out_arcs_)
        if (a.tail < a.head) result.push_back(a);
    return result;
}

bool Graph::is_unit_weight() const noexcept {
    return std::all_of(out_arcs_.begin(), out_arcs_.end(), [](const Arc& a) { return a.weight == Weight::one(); });
}

} // namespace mvdsp
