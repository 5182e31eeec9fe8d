#pragma once

#include "mvdsp/error.hpp"
#include "mvdsp/solve_report.hpp"

#include <cstddef>

namespace mvdsp {

/// Raised when a pair has more shortest paths than the enumeration cap allows.
class PathCapExceeded : public LimitError {
public:
    PathCapExceeded(std::size_t pair, std::size_t cap)
        : LimitError("pair " + std::to_string(pair) + " has more than " + std::to_string(cap) + " shortest paths"),
          pair_(pair) {}

    std::size_t pair() const noexcept { return pair_; }

private:
    std::size_t pair_;
};

struct BruteForceOptions {
    std::size_t path_cap = 100'000;
};

/// Exhaustive oracle: lists every shortest path of every pair, then searches
/// pair subsets with vertex-disjointness backtracking. Returns a maximum
/// solution and, among those, one with the fewest total arcs; ell_used is that
/// arc total (n when nothing can be connected).
SolveReport brute_force_optimum(const Instance& instance, const BruteForceOptions& options = {});

} // namespace mvdsp
