#include "mvdsp/coloring.hpp"

#include "mvdsp/error.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace mvdsp {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Coloring random_coloring(std::size_t vertex_count, std::size_t color_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(color_count - 1));
    Coloring coloring{std::vector<std::uint8_t>(vertex_count), color_count};
    for (auto& c : coloring.colors) c = static_cast<std::uint8_t>(pick(rng));
    return coloring;
}

bool separates(const Coloring& coloring, std::span<const VertexId> subset) noexcept {
    ColorSet used = 0;
    for (VertexId v : subset) {
        ColorSet bit = ColorSet{1} << coloring[v];
        if (used & bit) return false;
        used |= bit;
    }
    return true;
}

namespace {

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    __extension__ unsigned __int128 result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap) return cap + 1;
    }
    return static_cast<std::size_t>(result);
}

} // namespace

std::vector<Coloring> perfect_coloring_family(std::size_t vertex_count, std::span<const VertexId> relevant,
                                              std::size_t color_count, const FamilyOptions& options) {
    if (color_count == 0 || color_count > max_color_count)
        throw LimitError("color count " + std::to_string(color_count) + " outside [1, " +
                         std::to_string(max_color_count) + "]");
    const std::size_t r = relevant.size();

    if (r <= color_count) {
        Coloring injective{std::vector<std::uint8_t>(vertex_count, 0), color_count};
        for (std::size_t i = 0; i < r; ++i) injective.colors[static_cast<std::size_t>(relevant[i])] = static_cast<std::uint8_t>(i);
        return {injective};
    }

    const std::size_t subset_count = binomial_capped(r, color_count, options.subset_limit);
    if (subset_count > options.subset_limit)
        throw LimitError("perfect coloring family needs C(" + std::to_string(r) + ", " + std::to_string(color_count) +
                         ") subsets, above the limit of " + std::to_string(options.subset_limit));

    // All color_count-subsets of `relevant`, each stored as color_count vertex ids.
    std::vector<VertexId> subsets;
    subsets.reserve(subset_count * color_count);
    std::vector<std::size_t> idx(color_count);
    for (std::size_t i = 0; i < color_count; ++i) idx[i] = i;
    while (true) {
        for (std::size_t i : idx) subsets.push_back(relevant[i]);
        std::size_t pos = color_count;
        while (pos > 0 && idx[pos - 1] == r - color_count + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < color_count; ++i) idx[i] = idx[i - 1] + 1;
    }

    std::vector<std::size_t> uncovered(subset_count);
    for (std::size_t i = 0; i < subset_count; ++i) uncovered[i] = i;
    auto subset = [&](std::size_t i) { return std::span<const VertexId>(subsets).subspan(i * color_count, color_count); };

    std::vector<Coloring> family;
    auto absorb = [&](Coloring coloring) {
        auto rest = std::partition(uncovered.begin(), uncovered.end(),
                                   [&](std::size_t i) { return !separates(coloring, subset(i)); });
        if (rest == uncovered.end()) return false;
        uncovered.erase(rest, uncovered.end());
        family.push_back(std::move(coloring));
        return true;
    };

    std::mt19937_64 rng(mix_seed(options.seed, color_count));
    std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(color_count - 1));
    auto random_on_relevant = [&] {
        Coloring c{std::vector<std::uint8_t>(vertex_count, 0), color_count};
        for (VertexId v : relevant) c.colors[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(pick(rng));
        return c;
    };

    const std::size_t random_trials = std::max<std::size_t>(64, 2 * subset_count);
    for (std::size_t trial = 0; trial < random_trials && !uncovered.empty(); ++trial) absorb(random_on_relevant());

    while (!uncovered.empty()) {
        Coloring c = random_on_relevant();
        auto target = subset(uncovered.front());
        for (std::size_t i = 0; i < color_count; ++i) c.colors[static_cast<std::size_t>(target[i])] = static_cast<std::uint8_t>(i);
        absorb(std::move(c));
    }
    return family;
}

} // namespace mvdsp
