#pragma once

#include <cstddef>

#include "opt/core/objective.hpp"
#include "opt/core/rng.hpp"
#include "opt/core/search_space.hpp"
#include "opt/hraha/operators.hpp"
#include "opt/hraha/types.hpp"

namespace opt::hraha {

/// Hybrid red-fox / artificial-hummingbird minimizer.
///
/// Each iteration:
///   1. α from the population's fitness spread and the iteration schedule;
///      α picks one flight (omnidirectional / axial / diagonal) for the whole
///      population, and every member takes a greedy flight toward the best.
///   2. Every member draws δ ~ U[0, 1) and applies its local strategy:
///      none, stay-and-disguise, territorial foraging (both greedy),
///      gated migration of the worst member, or move-closer reproduction.
///   3. With elitism on, the best-so-far individual is written back over the
///      worst member if the population lost it.
/// Stops after cfg.max_iters iterations or once best <= cfg.target_fitness.
OptimizationResult run(const Objective& obj, const SearchSpace& space, const HrahaConfig& cfg,
                       std::size_t pop_size, Rng& rng);

}  // namespace opt::hraha
