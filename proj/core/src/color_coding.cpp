#include "mvdsp/color_coding.hpp"

#include "mvdsp/error.hpp"
#include "mvdsp/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mvdsp {

namespace {

// Beyond this many cells the table no longer fits in memory comfortably.
constexpr std::size_t max_table_cells = std::size_t{1} << 25;

void check_table_shape(std::size_t color_count, std::size_t max_paths) {
    if (color_count > max_color_count)
        throw LimitError("p + ell = " + std::to_string(color_count) + " colors exceeds the supported " +
                         std::to_string(max_color_count));
    if (max_paths == 0 || (std::size_t{1} << color_count) > max_table_cells / max_paths)
        throw LimitError("DP table with " + std::to_string(color_count) + " colors and " + std::to_string(max_paths) +
                         " path counts exceeds " + std::to_string(max_table_cells) + " cells");
}

} // namespace

DpTable::DpTable(std::size_t color_count, std::size_t max_paths) : color_count_(color_count), max_paths_(max_paths) {
    check_table_shape(color_count, max_paths);
    const std::size_t cells = max_paths * (std::size_t{1} << color_count);
    values_.assign(cells, infinity);
    witness_.assign(cells, -1);
}

struct ColorfulSearch::PairDag {
    std::size_t pair = 0;
    std::vector<VertexId> global;     // local id -> vertex
    std::vector<std::size_t> offsets; // CSR over local ids
    std::vector<std::uint32_t> heads;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
};

namespace {

struct Scratch {
    std::vector<std::uint32_t> queue;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
};

// Fewest-arc s-t walk inside the DAG using only vertices whose color is in `colors`.
template <class Dag>
std::uint32_t bfs_in_dag(const Dag& dag, const Coloring& coloring, ColorSet colors, Scratch& scratch,
                         Path* path_out) {
    auto active = [&](std::uint32_t local) { return (colors >> coloring[dag.global[local]]) & 1u; };
    if (!active(dag.source) || !active(dag.target)) return DpTable::infinity;

    const std::size_t n = dag.global.size();
    if (scratch.stamp.size() < n) {
        scratch.stamp.assign(n, 0);
        scratch.parent.resize(n);
        scratch.queue.resize(n);
        scratch.epoch = 0;
    }
    if (++scratch.epoch == 0) {
        std::fill(scratch.stamp.begin(), scratch.stamp.end(), 0);
        scratch.epoch = 1;
    }
    const std::uint32_t epoch = scratch.epoch;
    std::uint32_t* queue = scratch.queue.data();
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = dag.source;
    scratch.stamp[dag.source] = epoch;
    scratch.parent[dag.source] = dag.source;

    // Level-by-level so the hop count is known when the target is reached.
    std::uint32_t level = 0;
    while (head < tail) {
        const std::size_t level_end = tail;
        for (; head < level_end; ++head) {
            const std::uint32_t u = queue[head];
            if (u == dag.target) {
                if (path_out) {
                    path_out->vertices.clear();
                    for (std::uint32_t cur = u;; cur = scratch.parent[cur]) {
                        path_out->vertices.push_back(dag.global[cur]);
                        if (cur == dag.source) break;
                    }
                    std::reverse(path_out->vertices.begin(), path_out->vertices.end());
                }
                return level;
            }
            for (std::size_t a = dag.offsets[u]; a < dag.offsets[u + 1]; ++a) {
                const std::uint32_t v = dag.heads[a];
                if (scratch.stamp[v] == epoch || !active(v)) continue;
                scratch.stamp[v] = epoch;
                scratch.parent[v] = u;
                queue[tail++] = v;
            }
        }
        ++level;
    }
    return DpTable::infinity;
}

} // namespace

ColorfulSearch::ColorfulSearch(const Instance& instance) : instance_(&instance) {
    const Graph& graph = instance.graph();
    std::vector<std::uint8_t> relevant_mask(graph.vertex_count(), 0);

    for (std::size_t i = 0; i < instance.pair_count(); ++i) {
        const TerminalPair& pair = instance.pairs()[i];
        if (!lex_dijkstra(graph, pair.source)[pair.target].reachable()) continue;
        Graph dag = shortest_path_dag(graph, pair.source, pair.target);

        PairDag local;
        local.pair = i;
        std::vector<std::int64_t> to_local(graph.vertex_count(), -1);
        auto intern = [&](VertexId v) {
            auto& slot = to_local[static_cast<std::size_t>(v)];
            if (slot < 0) {
                slot = static_cast<std::int64_t>(local.global.size());
                local.global.push_back(v);
            }
            return static_cast<std::uint32_t>(slot);
        };
        intern(pair.source);
        for (const Arc& arc : dag.arcs()) {
            intern(arc.tail);
            intern(arc.head);
        }
        intern(pair.target);
        local.source = static_cast<std::uint32_t>(to_local[static_cast<std::size_t>(pair.source)]);
        local.target = static_cast<std::uint32_t>(to_local[static_cast<std::size_t>(pair.target)]);

        // Arcs arrive ordered by (tail, head); regroup them by local tail.
        std::vector<std::vector<std::uint32_t>> adjacency(local.global.size());
        for (const Arc& arc : dag.arcs())
            adjacency[to_local[static_cast<std::size_t>(arc.tail)]].push_back(
                static_cast<std::uint32_t>(to_local[static_cast<std::size_t>(arc.head)]));
        local.offsets.assign(1, 0);
        for (auto& out : adjacency) {
            local.heads.insert(local.heads.end(), out.begin(), out.end());
            local.offsets.push_back(local.heads.size());
        }
        for (VertexId v : local.global) relevant_mask[static_cast<std::size_t>(v)] = 1;
        dags_.push_back(std::move(local));
    }

    for (std::size_t v = 0; v < relevant_mask.size(); ++v)
        if (relevant_mask[v]) relevant_.push_back(static_cast<VertexId>(v));
}

ColorfulSearch::~ColorfulSearch() = default;

std::size_t ColorfulSearch::connectable_pairs() const noexcept { return dags_.size(); }

BaseCase ColorfulSearch::base_case(const Coloring& coloring, ColorSet colors) const {
    Scratch scratch;
    BaseCase result;
    const PairDag* best = nullptr;
    for (const PairDag& dag : dags_) {
        std::uint32_t hops = bfs_in_dag(dag, coloring, colors, scratch, nullptr);
        if (hops < result.arcs) {
            result.arcs = hops;
            best = &dag;
        }
    }
    if (best) {
        Path path;
        bfs_in_dag(*best, coloring, colors, scratch, &path);
        result.witness = SolutionEntry{best->pair, std::move(path)};
    }
    return result;
}

DpTable ColorfulSearch::fill(const Coloring& coloring, std::size_t max_paths) const {
    const std::size_t c = coloring.color_count;
    DpTable table(c, max_paths);
    const std::size_t subsets = std::size_t{1} << c;
    Scratch scratch;

    auto base = table.values(1);
    auto base_pair = table.witnesses(1);
    for (std::size_t x = 0; x < subsets; ++x) {
        for (const PairDag& dag : dags_) {
            std::uint32_t hops = bfs_in_dag(dag, coloring, static_cast<ColorSet>(x), scratch, nullptr);
            if (hops < base[x]) {
                base[x] = hops;
                base_pair[x] = static_cast<std::int64_t>(dag.pair);
            }
        }
    }

    for (std::size_t r = 2; r <= max_paths; ++r) {
        auto prev = table.values(r - 1);
        auto cur = table.values(r);
        auto split = table.witnesses(r);
        for (std::size_t x = 1; x < subsets; ++x) {
            std::uint32_t best = DpTable::infinity;
            std::size_t best_y = 0;
            for (std::size_t y = (x - 1) & x; y != 0; y = (y - 1) & x) {
                const std::uint32_t one = base[y];
                if (one == DpTable::infinity) continue;
                const std::uint32_t rest = prev[x ^ y];
                if (rest == DpTable::infinity) continue;
                if (one + rest < best) {
                    best = one + rest;
                    best_y = y;
                }
            }
            cur[x] = best;
            if (best != DpTable::infinity) split[x] = static_cast<std::int64_t>(best_y);
        }
    }
    return table;
}

Solution ColorfulSearch::extract(const DpTable& table, const Coloring& coloring, ColorSet colors, std::size_t r) const {
    if (table.value(colors, r) == DpTable::infinity) throw Error("cannot extract a solution from an infinite cell");
    Scratch scratch;
    Solution solution;
    auto add_path = [&](ColorSet y) {
        const auto pair = static_cast<std::size_t>(table.witness(y, 1));
        auto dag = std::find_if(dags_.begin(), dags_.end(), [&](const PairDag& d) { return d.pair == pair; });
        Path path;
        bfs_in_dag(*dag, coloring, y, scratch, &path);
        solution.entries.push_back({pair, std::move(path)});
    };
    for (; r >= 2; --r) {
        const auto y = static_cast<ColorSet>(table.witness(colors, r));
        add_path(y);
        colors ^= y;
    }
    add_path(colors);
    solution.normalize();
    return solution;
}

BaseCase colorful_base_case(const Instance& instance, const Coloring& coloring, ColorSet colors) {
    return ColorfulSearch(instance).base_case(coloring, colors);
}

DpTable dp_fill(const Instance& instance, const Coloring& coloring, std::size_t paths) {
    return ColorfulSearch(instance).fill(coloring, paths);
}

namespace {

std::uint64_t iterations_for(std::size_t colors) {
    const double n = std::ceil(std::exp(static_cast<double>(colors)));
    return n >= 1e18 ? std::uint64_t{1'000'000'000'000'000'000} : static_cast<std::uint64_t>(n);
}

} // namespace

SolveReport color_coding_exact(const Instance& instance, std::size_t target, const ColorCodingOptions& options) {
    const bool deterministic = options.mode == ColoringMode::deterministic;
    const std::size_t n = instance.vertex_count();
    SolveReport report;
    report.mode = deterministic ? Algorithm::color_coding_deterministic : Algorithm::color_coding_randomized;

    if (target == 0) {
        report.status = SolveStatus::found;
        report.optimal = true;
        report.ell_used = 0;
        return report;
    }

    auto definite_no = [&] {
        report.status = SolveStatus::not_found;
        report.optimal = deterministic;
        report.ell_used = n;
        return report;
    };
    if (target > instance.pair_count()) return definite_no();

    ColorfulSearch search(instance);
    const std::size_t relevant = search.relevant_vertices().size();
    // p paths with ℓ arcs occupy p + ℓ distinct relevant vertices.
    if (search.connectable_pairs() < target || relevant < 2 * target) return definite_no();

    // No ℓ below the sum of the target smallest per-pair arc minimums can work.
    std::vector<std::size_t> min_hops;
    for (const auto& pair : instance.pairs()) {
        const DistLabel label = lex_dijkstra(instance.graph(), pair.source)[pair.target];
        if (label.reachable()) min_hops.push_back(label.hops);
    }
    std::sort(min_hops.begin(), min_hops.end());
    const std::size_t hop_bound = std::accumulate(min_hops.begin(), min_hops.begin() + static_cast<std::ptrdiff_t>(target),
                                                  std::size_t{0});
    const std::size_t first_ell = std::max({target, options.min_ell, hop_bound});
    const std::size_t natural_last = relevant - target;
    const std::size_t last_ell = std::min(natural_last, options.max_ell.value_or(n));

    auto succeed = [&](const DpTable& table, const Coloring& coloring, std::size_t ell) {
        report.solution = search.extract(table, coloring, table.full_set(), target);
        report.status = SolveStatus::found;
        report.optimal = deterministic;
        report.ell_used = ell;
        return report;
    };

    for (std::size_t ell = first_ell; ell <= last_ell; ++ell) {
        const std::size_t colors = target + ell;
        if (deterministic) {
            // With at least as many colors as relevant vertices one injective coloring is perfect.
            const std::size_t palette = std::min(colors, relevant);
            FamilyOptions family_options{options.seed, options.family_subset_limit};
            for (const Coloring& coloring :
                 perfect_coloring_family(n, search.relevant_vertices(), palette, family_options)) {
                ++report.iterations;
                DpTable table = search.fill(coloring, target);
                if (table.value(table.full_set(), target) <= ell) return succeed(table, coloring, ell);
            }
            if (palette == relevant) return definite_no();
        } else {
            if (colors > max_color_count)
                throw LimitError("p + ell = " + std::to_string(colors) + " colors exceeds the supported " +
                                 std::to_string(max_color_count));
            const std::uint64_t rounds = iterations_for(colors);
            for (std::uint64_t i = 0; i < rounds; ++i) {
                if (report.iterations >= options.max_iterations) {
                    report.status = SolveStatus::budget_exhausted;
                    report.ell_used = std::nullopt;
                    return report;
                }
                Coloring coloring = random_coloring(n, colors, mix_seed(options.seed, report.iterations));
                ++report.iterations;
                DpTable table = search.fill(coloring, target);
                if (table.value(table.full_set(), target) <= ell) return succeed(table, coloring, ell);
            }
        }
    }

    if (last_ell < natural_last) {
        // The caller's ℓ bound stopped the sweep early.
        report.status = SolveStatus::budget_exhausted;
        report.ell_used = std::nullopt;
        return report;
    }
    report.status = SolveStatus::not_found;
    report.optimal = deterministic;
    report.ell_used = n;
    return report;
}

} // namespace mvdsp
