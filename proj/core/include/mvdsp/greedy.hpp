#pragma once

#include "mvdsp/solve_report.hpp"

namespace mvdsp {

/// Greedy min{√n, ⌈√ℓ⌉}-approximation.
///
/// Repeatedly connects the pair whose fewest-arc shortest path is shortest in
/// arcs (lowest pair index on ties), deletes that path's vertices and drops
/// every pair whose distance grew or whose terminal vanished. Runs until no
/// pair can still be connected at its original distance.
SolveReport greedy_approx(const Instance& instance);

} // namespace mvdsp
