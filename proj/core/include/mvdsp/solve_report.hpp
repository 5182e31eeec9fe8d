#pragma once

#include "mvdsp/instance.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace mvdsp {

enum class Algorithm {
    greedy,
    color_coding_randomized,
    color_coding_deterministic,
    brute_force,
};

std::string_view to_string(Algorithm algorithm) noexcept;

enum class SolveStatus {
    found,            ///< a solution of the requested size was produced
    not_found,        ///< no solution of the requested size (certified for exact modes)
    budget_exhausted, ///< an iteration or ℓ budget ran out before an answer
};

std::string_view to_string(SolveStatus status) noexcept;

struct SolveReport {
    Solution solution;
    Algorithm mode = Algorithm::greedy;
    SolveStatus status = SolveStatus::not_found;
    /// True only when the answer is certified by an exact method.
    bool optimal = false;
    /// Smallest ℓ at which the solution was certified; n for a "no" answer.
    std::optional<std::size_t> ell_used;
    /// Colorings tried (color coding) or search nodes visited (brute force).
    std::uint64_t iterations = 0;
};

} // namespace mvdsp
