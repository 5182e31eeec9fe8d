#pragma once

#include "mvdsp/instance.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mvdsp {

enum class ViolationKind {
    not_a_path,
    wrong_endpoints,
    not_shortest,
    vertex_overlap,
    duplicate_pair,
    // layering checks
    no_layering,
    layer_partition,
    layer_arc,
    terminal_layer,
    layer_distance,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct VerifyReport {
    std::vector<Violation> violations;
    std::size_t size = 0;
    std::size_t total_arcs = 0;

    bool feasible() const noexcept { return violations.empty(); }
    bool has(ViolationKind kind) const noexcept;
};

/// Re-checks a solution from scratch: each entry is a simple path of the graph
/// joining its pair's terminals, its weight equals a freshly computed
/// distance, pair indices are distinct, and no vertex (endpoints included)
/// appears in two entries. Every violation found is reported.
VerifyReport verify_solution(const Instance& instance, const Solution& solution);

/// Checks a declared layering V_1..V_λ: the layers partition the vertices,
/// every arc joins consecutive layers, every s_i is in V_1 and every t_i in
/// V_λ, and dist(s_i, t_i) = λ - 1.
VerifyReport verify_layering(const Instance& instance);

} // namespace mvdsp
