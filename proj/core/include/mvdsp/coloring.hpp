#pragma once

#include "mvdsp/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mvdsp {

/// Bit set over colors 0..63.
using ColorSet = std::uint64_t;

/// Widest color palette a DP table can be indexed by.
inline constexpr std::size_t max_color_count = 62;

/// Assignment vertex -> color in [0, color_count).
struct Coloring {
    std::vector<std::uint8_t> colors;
    std::size_t color_count = 0;

    std::uint8_t operator[](VertexId v) const { return colors[static_cast<std::size_t>(v)]; }
    ColorSet full_set() const noexcept { return color_count >= 64 ? ~ColorSet{0} : (ColorSet{1} << color_count) - 1; }
};

/// splitmix64 finalizer; derives independent per-iteration seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Uniform coloring of all `vertex_count` vertices, fully determined by `seed`.
Coloring random_coloring(std::size_t vertex_count, std::size_t color_count, std::uint64_t seed);

/// True iff `coloring` gives the vertices of `subset` pairwise distinct colors.
bool separates(const Coloring& coloring, std::span<const VertexId> subset) noexcept;

struct FamilyOptions {
    std::uint64_t seed = 0;
    /// Upper bound on the number of `color_count`-subsets the covering may enumerate.
    std::size_t subset_limit = 2'000'000;
};

/// Colorings such that every subset of `relevant` with at most `color_count`
/// vertices is injectively colored by at least one member.
///
/// Built by greedy covering of all `color_count`-subsets of `relevant`: seeded
/// random colorings are kept when they separate a subset not yet covered, and
/// any subset still uncovered afterwards gets a coloring constructed to
/// separate it. Vertices outside `relevant` receive color 0. Throws
/// mvdsp::LimitError when the subset count exceeds `subset_limit`.
std::vector<Coloring> perfect_coloring_family(std::size_t vertex_count, std::span<const VertexId> relevant,
                                              std::size_t color_count, const FamilyOptions& options = {});

} // namespace mvdsp
