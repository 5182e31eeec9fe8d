#pragma once

#include "mvdsp/instance.hpp"

#include <initializer_list>
#include <tuple>
#include <vector>

namespace testing_helpers {

inline mvdsp::Graph graph(std::size_t n, bool directed, std::initializer_list<std::tuple<int, int, mvdsp::Weight>> arcs) {
    std::vector<mvdsp::Arc> list;
    for (const auto& [u, v, w] : arcs) list.push_back({u, v, w});
    return mvdsp::Graph(n, directed, list);
}

inline mvdsp::Graph unit_graph(std::size_t n, bool directed, std::initializer_list<std::pair<int, int>> arcs) {
    std::vector<mvdsp::Arc> list;
    for (const auto& [u, v] : arcs) list.push_back({u, v, mvdsp::Weight::one()});
    return mvdsp::Graph(n, directed, list);
}

/// a-b-c-d path with pairs (a,d) and (b,c): only one pair fits.
inline mvdsp::Instance conflict_instance(std::size_t target = 2) {
    return mvdsp::Instance(unit_graph(4, false, {{0, 1}, {1, 2}, {2, 3}}), {{0, 3}, {1, 2}}, target);
}

inline mvdsp::Path path(std::initializer_list<int> vs) {
    mvdsp::Path p;
    for (int v : vs) p.vertices.push_back(v);
    return p;
}

} // namespace testing_helpers
