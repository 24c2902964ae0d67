#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "opt/core/objective.hpp"
#include "opt/core/rng.hpp"
#include "opt/core/search_space.hpp"
#include "opt/hraha/types.hpp"

namespace opt::baselines {

using hraha::OptimizationResult;

enum class BaselineKind { RFO, AHA, PSO };

std::string_view to_string(BaselineKind kind);
/// Accepts "rfo", "aha", "pso" (case-insensitive).
std::optional<BaselineKind> parse_baseline(std::string_view name);

/// Global-best PSO with inertia. Defaults are the constriction-equivalent
/// values w = 0.729, c1 = c2 = 1.49445.
struct PsoParams {
  double inertia = 0.729;
  double cognitive = 1.49445;
  double social = 1.49445;
  /// Per-axis velocity limit as a fraction of the axis width.
  double max_velocity_fraction = 0.2;
};

/// Red fox optimization: greedy sign-step toward the best fox, then a local
/// phase where foxes with μ > 0.75 stay put and the rest circle (half through
/// the stay-and-disguise chain, half through territorial foraging), then
/// reproduction of the worst 5% from the alpha couple's habitat.
struct RfoParams {
  double scaling_a_max = 0.2;
  double stay_probability = 0.25;
  double worst_fraction = 0.05;
  double nomad_probability = 0.5;
  double territorial_lambda = 0.5;
};

/// Artificial hummingbird algorithm with a visit table: guided foraging
/// toward the most neglected source, territorial foraging around the current
/// source, and migration of the worst bird every 2·pop iterations.
struct AhaParams {
  /// Unset means 2·pop_size.
  std::optional<std::size_t> migration_coefficient;
};

OptimizationResult run_pso(const Objective& obj, const SearchSpace& space, std::size_t pop_size,
                           std::size_t max_iters, Rng& rng, const PsoParams& params = {});
OptimizationResult run_rfo(const Objective& obj, const SearchSpace& space, std::size_t pop_size,
                           std::size_t max_iters, Rng& rng, const RfoParams& params = {});
OptimizationResult run_aha(const Objective& obj, const SearchSpace& space, std::size_t pop_size,
                           std::size_t max_iters, Rng& rng, const AhaParams& params = {});

/// Uniform sampling of pop_size points per iteration, plus an initial batch.
OptimizationResult random_search(const Objective& obj, const SearchSpace& space, std::size_t pop_size,
                                 std::size_t max_iters, Rng& rng);

/// Dispatches to the baseline with default parameters. max_iters may be 0,
/// in which case the result is the best of the initial population.
OptimizationResult run_baseline(BaselineKind kind, const Objective& obj, const SearchSpace& space,
                                std::size_t pop_size, std::size_t max_iters, Rng& rng);

}  // namespace opt::baselines
