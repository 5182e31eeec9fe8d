#include "mvdsp/solve.hpp"

namespace mvdsp {

std::string_view to_string(Algorithm algorithm) noexcept {
    switch (algorithm) {
    case Algorithm::greedy: return "greedy";
    case Algorithm::color_coding_randomized: return "color_coding_randomized";
    case Algorithm::color_coding_deterministic: return "color_coding_deterministic";
    case Algorithm::brute_force: return "brute_force";
    }
    return "unknown";
}

std::string_view to_string(SolveStatus status) noexcept {
    switch (status) {
    case SolveStatus::found: return "found";
    case SolveStatus::not_found: return "not_found";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

namespace {

ColorCodingOptions color_coding_options(Algorithm algorithm, const SolveOptions& options) {
    ColorCodingOptions cc = options.color_coding;
    cc.mode = algorithm == Algorithm::color_coding_randomized ? ColoringMode::randomized : ColoringMode::deterministic;
    return cc;
}

SolveReport with_target(SolveReport report, std::size_t target) {
    if (report.status != SolveStatus::budget_exhausted)
        report.status = report.solution.size() >= target ? SolveStatus::found : SolveStatus::not_found;
    return report;
}

} // namespace

SolveReport solve_decision(const Instance& instance, Algorithm algorithm, std::size_t target,
                           const SolveOptions& options) {
    switch (algorithm) {
    case Algorithm::greedy: return with_target(greedy_approx(instance), target);
    case Algorithm::brute_force: return with_target(brute_force_optimum(instance, options.brute_force), target);
    case Algorithm::color_coding_randomized:
    case Algorithm::color_coding_deterministic:
        return color_coding_exact(instance, target, color_coding_options(algorithm, options));
    }
    return {};
}

SolveReport solve_max(const Instance& instance, Algorithm algorithm, const SolveOptions& options) {
    if (algorithm == Algorithm::greedy) return with_target(greedy_approx(instance), 0);
    if (algorithm == Algorithm::brute_force) return with_target(brute_force_optimum(instance, options.brute_force), 0);

    ColorCodingOptions cc = color_coding_options(algorithm, options);
    const bool deterministic = cc.mode == ColoringMode::deterministic;

    SolveReport best;
    best.mode = algorithm;
    best.status = SolveStatus::found;
    best.optimal = deterministic;
    best.ell_used = instance.vertex_count();
    std::uint64_t iterations = 0;

    for (std::size_t p = 1; p <= instance.pair_count(); ++p) {
        if (!deterministic && cc.max_iterations <= iterations) {
            best.status = SolveStatus::budget_exhausted;
            best.optimal = false;
            break;
        }
        ColorCodingOptions round = cc;
        if (!deterministic) round.max_iterations = cc.max_iterations - iterations;
        SolveReport attempt = color_coding_exact(instance, p, round);
        iterations += attempt.iterations;
        if (attempt.status == SolveStatus::budget_exhausted) {
            best.status = SolveStatus::budget_exhausted;
            best.optimal = false;
            break;
        }
        if (attempt.status != SolveStatus::found) break;
        best.solution = std::move(attempt.solution);
        best.ell_used = attempt.ell_used;
        if (deterministic && attempt.ell_used) cc.min_ell = *attempt.ell_used + 1;
    }
    best.iterations = iterations;
    return best;
}

} // namespace mvdsp
