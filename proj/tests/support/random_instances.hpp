#pragma once

#include "mvdsp/generators.hpp"
#include "mvdsp/instance.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Small rational weights, zero included.
inline mvdsp::Weight small_weight(Rng& rng) {
    static const std::pair<int, int> table[] = {{0, 1}, {1, 2}, {1, 1}, {1, 1}, {3, 2}, {2, 1}, {1, 3}, {2, 3}, {5, 2}};
    auto [n, d] = table[uniform(rng, 0, std::size(table) - 1)];
    return mvdsp::Weight(n, d);
}

inline std::vector<mvdsp::Arc> random_edges(Rng& rng, std::size_t n, std::size_t m, bool directed, bool weighted) {
    std::set<std::pair<int, int>> seen;
    std::vector<mvdsp::Arc> edges;
    for (std::size_t tries = 0; edges.size() < m && tries < 20 * m + 20; ++tries) {
        int u = static_cast<int>(uniform(rng, 0, n - 1));
        int v = static_cast<int>(uniform(rng, 0, n - 1));
        if (u == v) continue;
        auto key = directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) continue;
        edges.push_back({u, v, weighted ? small_weight(rng) : mvdsp::Weight::one()});
    }
    return edges;
}

/// n in [2, max_n], m <= max_m, k in [1, max_k] pairs with s != t.
inline mvdsp::Instance random_instance(Rng& rng, std::size_t max_n, std::size_t max_m, std::size_t max_k,
                                       bool weighted) {
    const std::size_t n = uniform(rng, 2, max_n);
    const std::size_t m = uniform(rng, 0, std::min(max_m, n * (n - 1) / 2 * 2));
    const bool directed = uniform(rng, 0, 2) == 0;
    mvdsp::Graph g(n, directed, random_edges(rng, n, m, directed, weighted));
    const std::size_t k = uniform(rng, 1, max_k);
    std::vector<mvdsp::TerminalPair> pairs;
    for (std::size_t i = 0; i < k; ++i) {
        auto s = static_cast<mvdsp::VertexId>(uniform(rng, 0, n - 1));
        auto t = static_cast<mvdsp::VertexId>(uniform(rng, 0, n - 2));
        if (t >= s) ++t;
        pairs.push_back({s, t});
    }
    return mvdsp::Instance(std::move(g), std::move(pairs), k);
}

inline mvdsp::Graph random_graph(Rng& rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<mvdsp::Arc> edges;
    for (int u = 0; u < static_cast<int>(n); ++u)
        for (int v = u + 1; v < static_cast<int>(n); ++v)
            if (coin(rng)) edges.push_back({u, v, mvdsp::Weight::one()});
    return mvdsp::Graph(n, false, edges);
}

/// k color classes of nu vertices; vertex c*nu + j, edges only across classes.
inline mvdsp::ColoredGraph random_colored_graph(Rng& rng, std::size_t k, std::size_t nu, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<mvdsp::Arc> edges;
    const int n = static_cast<int>(k * nu);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / static_cast<int>(nu) != v / static_cast<int>(nu) && coin(rng)) edges.push_back({u, v, mvdsp::Weight::one()});
    return {mvdsp::Graph(k * nu, false, edges), k, nu};
}

/// `clauses` clauses over `vars` variables, each with `width` distinct variables.
inline mvdsp::CnfFormula random_cnf(Rng& rng, std::size_t vars, std::size_t clauses, std::size_t min_width,
                                    std::size_t max_width) {
    mvdsp::CnfFormula f{vars, {}};
    for (std::size_t c = 0; c < clauses; ++c) {
        std::vector<int> pool(vars);
        for (std::size_t i = 0; i < vars; ++i) pool[i] = static_cast<int>(i + 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t width = uniform(rng, min_width, std::min(max_width, vars));
        std::vector<int> clause;
        for (std::size_t i = 0; i < width; ++i) clause.push_back(uniform(rng, 0, 1) ? pool[i] : -pool[i]);
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

} // namespace gen
