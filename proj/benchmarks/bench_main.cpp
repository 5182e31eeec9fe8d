#include "mvdsp/mvdsp.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <set>

using namespace mvdsp;

namespace {

// p disjoint pairs, each joined by `width` parallel two-arc routes.
Instance parallel_pairs(int p, int width) {
    std::vector<Arc> arcs;
    std::vector<TerminalPair> pairs;
    int next = 0;
    for (int i = 0; i < p; ++i) {
        const int s = next++, t = next++;
        for (int w = 0; w < width; ++w) {
            const int mid = next++;
            arcs.push_back({s, mid, Weight::one()});
            arcs.push_back({mid, t, Weight::one()});
        }
        pairs.push_back({s, t});
    }
    return Instance(Graph(static_cast<std::size_t>(next), false, arcs), pairs, static_cast<std::size_t>(p));
}

Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> vertex(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> weight(1, 9);
    std::vector<Arc> arcs;
    std::set<std::pair<int, int>> seen;
    while (arcs.size() < m) {
        int u = vertex(rng), v = vertex(rng);
        if (u == v || !seen.insert({std::min(u, v), std::max(u, v)}).second) continue;
        arcs.push_back({u, v, Weight(weight(rng))});
    }
    return Graph(n, false, arcs);
}

void BM_DpFill(benchmark::State& state) {
    const auto ell = static_cast<std::size_t>(state.range(0));
    const std::size_t p = 4;
    Instance in = parallel_pairs(4, 2);
    ColorfulSearch search(in);
    Coloring coloring = random_coloring(in.vertex_count(), p + ell, ell);
    for (auto _ : state) benchmark::DoNotOptimize(search.fill(coloring, p));
}
BENCHMARK(BM_DpFill)->DenseRange(2, 10);

void BM_LexDijkstra(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Graph g = random_graph(n, 4 * n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(lex_dijkstra(g, 0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LexDijkstra)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_Greedy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Graph g = random_graph(n, 3 * n, 11);
    std::vector<TerminalPair> pairs;
    for (std::size_t i = 0; i < 16; ++i)
        pairs.push_back({static_cast<VertexId>(i), static_cast<VertexId>(n - 1 - i)});
    Instance in(std::move(g), pairs, 1);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_approx(in));
}
BENCHMARK(BM_Greedy)->RangeMultiplier(4)->Range(64, 4096);

void BM_SolveMaxSampleClique(benchmark::State& state) {
    const int codes[] = {12, 14, 15, 16, 23, 25, 26, 34, 36, 45, 56};
    std::vector<Arc> arcs;
    for (int c : codes) arcs.push_back({c / 10 - 1, c % 10 - 1, Weight::one()});
    Instance in = gen_clique(Graph(6, false, arcs)).instance;
    for (auto _ : state) benchmark::DoNotOptimize(solve_max(in, Algorithm::brute_force));
}
BENCHMARK(BM_SolveMaxSampleClique);

} // namespace

BENCHMARK_MAIN();
