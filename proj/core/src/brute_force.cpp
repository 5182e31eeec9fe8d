#include "mvdsp/brute_force.hpp"

#include "mvdsp/shortest_paths.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace mvdsp {

namespace {

class VertexBits {
public:
    explicit VertexBits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(VertexId v) { words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }
    bool intersects(const VertexBits& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    void merge(const VertexBits& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    }
    void remove(const VertexBits& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Candidate {
    const Path* path;
    VertexBits bits;
};

} // namespace

SolveReport brute_force_optimum(const Instance& instance, const BruteForceOptions& options) {
    const Graph& graph = instance.graph();
    const std::size_t k = instance.pair_count();

    std::vector<std::vector<Path>> paths(k);
    std::vector<std::vector<Candidate>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
        const TerminalPair& pair = instance.pairs()[i];
        auto listed = enumerate_shortest_paths(graph, pair.source, pair.target, options.path_cap);
        if (!listed) throw PathCapExceeded(i, options.path_cap);
        paths[i] = std::move(*listed);
        for (const Path& p : paths[i]) {
            VertexBits bits(graph.vertex_count());
            for (VertexId v : p.vertices) bits.set(v);
            candidates[i].push_back({&p, std::move(bits)});
        }
    }

    // Pairs that can never be connected only slow the search down.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < k; ++i)
        if (!candidates[i].empty()) order.push_back(i);

    SolveReport report;
    report.mode = Algorithm::brute_force;

    std::vector<std::pair<std::size_t, const Path*>> current;
    std::vector<std::pair<std::size_t, const Path*>> best;
    std::size_t current_arcs = 0;
    std::size_t best_arcs = 0;
    VertexBits used(graph.vertex_count());

    std::function<void(std::size_t)> search = [&](std::size_t pos) {
        ++report.iterations;
        const std::size_t reachable = current.size() + (order.size() - pos);
        if (reachable < best.size()) return;
        if (reachable == best.size() && current_arcs >= best_arcs && !best.empty()) return;
        if (pos == order.size()) {
            if (current.size() > best.size() || (current.size() == best.size() && current_arcs < best_arcs)) {
                best = current;
                best_arcs = current_arcs;
            }
            return;
        }
        const std::size_t pair = order[pos];
        for (const Candidate& c : candidates[pair]) {
            if (used.intersects(c.bits)) continue;
            used.merge(c.bits);
            current.emplace_back(pair, c.path);
            current_arcs += c.path->arc_count();
            search(pos + 1);
            current_arcs -= c.path->arc_count();
            current.pop_back();
            used.remove(c.bits);
        }
        search(pos + 1);
    };
    search(0);

    for (const auto& [pair, path] : best) report.solution.entries.push_back({pair, *path});
    report.solution.normalize();
    report.status = report.solution.size() >= instance.target() ? SolveStatus::found : SolveStatus::not_found;
    report.optimal = true;
    report.ell_used = best.empty() ? graph.vertex_count() : best_arcs;
    return report;
}

} // namespace mvdsp
