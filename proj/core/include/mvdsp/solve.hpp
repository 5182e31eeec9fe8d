#pragma once

#include "mvdsp/brute_force.hpp"
#include "mvdsp/color_coding.hpp"
#include "mvdsp/greedy.hpp"

namespace mvdsp {

struct SolveOptions {
    ColorCodingOptions color_coding; ///< mode is overridden by the chosen algorithm
    BruteForceOptions brute_force;
};

/// Can at least `target` pairs be connected? Greedy and brute force answer
/// by comparing their solution size with `target`.
SolveReport solve_decision(const Instance& instance, Algorithm algorithm, std::size_t target,
                           const SolveOptions& options = {});

/// Largest number of pairs that can be connected.
///
/// Color coding walks p upward from 1 and stops at the first failure; in
/// deterministic mode the ℓ sweep resumes where the previous p succeeded,
/// because a solution with one more path needs at least one more arc.
SolveReport solve_max(const Instance& instance, Algorithm algorithm, const SolveOptions& options = {});

} // namespace mvdsp
