#pragma once

#include "mvdsp/coloring.hpp"
#include "mvdsp/solve_report.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace mvdsp {

/// f[X, r]: the fewest total arcs of r shortest terminal paths for distinct
/// pairs that use only colors in X, no color shared between two paths.
/// Cells keep the split that realised them so a solution can be rebuilt.
class DpTable {
public:
    static constexpr std::uint32_t infinity = std::numeric_limits<std::uint32_t>::max();

    DpTable() = default;
    DpTable(std::size_t color_count, std::size_t max_paths);

    std::size_t color_count() const noexcept { return color_count_; }
    std::size_t max_paths() const noexcept { return max_paths_; }
    ColorSet full_set() const noexcept { return (ColorSet{1} << color_count_) - 1; }

    /// r in [1, max_paths].
    std::uint32_t value(ColorSet colors, std::size_t r) const { return values_[cell(colors, r)]; }
    /// For r == 1: the pair index that realises the cell (-1 when infinite).
    /// For r >= 2: the color subset Y given to the last path.
    std::int64_t witness(ColorSet colors, std::size_t r) const { return witness_[cell(colors, r)]; }

    void set(ColorSet colors, std::size_t r, std::uint32_t value, std::int64_t witness) {
        values_[cell(colors, r)] = value;
        witness_[cell(colors, r)] = witness;
    }

    /// All cells of one r, indexed by color set.
    std::span<std::uint32_t> values(std::size_t r) { return {values_.data() + cell(0, r), std::size_t{1} << color_count_}; }
    std::span<std::int64_t> witnesses(std::size_t r) { return {witness_.data() + cell(0, r), std::size_t{1} << color_count_}; }

private:
    std::size_t cell(ColorSet colors, std::size_t r) const {
        return (r - 1) * (std::size_t{1} << color_count_) + static_cast<std::size_t>(colors);
    }

    std::size_t color_count_ = 0;
    std::size_t max_paths_ = 0;
    std::vector<std::uint32_t> values_;
    std::vector<std::int64_t> witness_;
};

struct BaseCase {
    std::uint32_t arcs = DpTable::infinity;
    std::optional<SolutionEntry> witness;
};

/// Precomputed per-pair data shared by every coloring of one instance.
///
/// A path inside G[W] has weight dist_G(s,t) exactly when it runs inside the
/// pair's shortest-path DAG, so single-path cells are evaluated by a fewest-arc
/// search of each pair's DAG restricted to the colors at hand.
class ColorfulSearch {
public:
    explicit ColorfulSearch(const Instance& instance);
    ~ColorfulSearch();
    ColorfulSearch(const ColorfulSearch&) = delete;
    ColorfulSearch& operator=(const ColorfulSearch&) = delete;

    const Instance& instance() const noexcept { return *instance_; }
    /// Vertices on some shortest terminal path, ascending.
    const std::vector<VertexId>& relevant_vertices() const noexcept { return relevant_; }
    std::size_t connectable_pairs() const noexcept;

    /// f[X, 1] with its witness path.
    BaseCase base_case(const Coloring& coloring, ColorSet colors) const;

    /// Fills f[X, r] for every X over the coloring's palette and r = 1..max_paths.
    DpTable fill(const Coloring& coloring, std::size_t max_paths) const;

    /// Rebuilds the paths behind a finite cell.
    Solution extract(const DpTable& table, const Coloring& coloring, ColorSet colors, std::size_t r) const;

private:
    struct PairDag;

    const Instance* instance_;
    std::vector<VertexId> relevant_;
    std::vector<PairDag> dags_;
};

/// f[X, 1] of a coloring; see ColorfulSearch::base_case.
BaseCase colorful_base_case(const Instance& instance, const Coloring& coloring, ColorSet colors);

/// The full table f[X, r] for r = 1..paths under `coloring`.
DpTable dp_fill(const Instance& instance, const Coloring& coloring, std::size_t paths);

enum class ColoringMode { randomized, deterministic };

struct ColorCodingOptions {
    ColoringMode mode = ColoringMode::deterministic;
    std::uint64_t seed = 0;
    /// Total colorings tried over the whole ℓ sweep (randomized mode).
    std::uint64_t max_iterations = 1'000'000;
    /// Largest ℓ to try; defaults to n.
    std::optional<std::size_t> max_ell;
    /// First ℓ to try; values below p are raised to p.
    std::size_t min_ell = 0;
    /// Forwarded to perfect_coloring_family.
    std::size_t family_subset_limit = 2'000'000;
};

/// Decides whether `target` pairs can be connected, by color coding with ℓ
/// swept upward from the sum of the p smallest per-pair arc minimums.
///
/// For each ℓ the vertices get p+ℓ colors and a coloring succeeds when
/// f[all colors, p] <= ℓ. Randomized mode tries ⌈e^{p+ℓ}⌉ uniform colorings
/// per ℓ (subject to max_iterations overall), so its "no" carries one-sided
/// error. Deterministic mode runs a perfect coloring family and is exact.
SolveReport color_coding_exact(const Instance& instance, std::size_t target, const ColorCodingOptions& options = {});

} // namespace mvdsp
