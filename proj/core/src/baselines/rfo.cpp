#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opt/baselines/baselines.hpp"
#include "opt/core/population.hpp"
#include "opt/hraha/operators.hpp"

namespace opt::baselines {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void keep_if_better(Individual& fox, std::vector<double> candidate, Evaluator& eval) {
  const double f = eval(candidate);
  if (f <= *fox.fitness) {
    fox.position = std::move(candidate);
    fox.fitness = f;
  }
}

}  // namespace

OptimizationResult run_rfo(const Objective& obj, const SearchSpace& space, std::size_t pop_size,
                           std::size_t max_iters, Rng& rng, const RfoParams& params) {
  if (obj.arity != space.dims()) throw std::invalid_argument("rfo: objective arity does not match search space");
  const std::size_t dims = space.dims();
  Evaluator eval(obj);

  hraha::HrahaConfig repro;
  repro.worst_fraction = params.worst_fraction;
  repro.nomad_probability = params.nomad_probability;

  Population pop = init_population(space, pop_size, rng);
  evaluate_inplace(pop, eval);
  Individual elite = pop.best_member();

  OptimizationResult result;
  for (std::size_t t = 0; t < max_iters; ++t) {
    // Global phase: a random-length step along sign(best - x).
    const Individual leader = pop.best_member();
    for (auto& fox : pop.members) {
      double dist2 = 0.0;
      for (std::size_t j = 0; j < dims; ++j) {
        const double d = leader.position[j] - fox.position[j];
        dist2 += d * d;
      }
      const double step = rng.uniform() * std::sqrt(std::sqrt(dist2));
      std::vector<double> candidate = fox.position;
      for (std::size_t j = 0; j < dims; ++j) {
        const double d = leader.position[j] - fox.position[j];
        candidate[j] += step * static_cast<double>((d > 0) - (d < 0));
      }
      clamp_inplace(candidate, space);
      keep_if_better(fox, std::move(candidate), eval);
    }
    pop.update_best();

    // Local phase.
    for (std::size_t i = 0; i < pop_size; ++i) {
      if (rng.uniform() < params.stay_probability) {
        ++result.strategy_counts[hraha::LocalStrategy::None];
        continue;
      }
      if (rng.uniform() < 0.5) {
        const double a = rng.uniform() * params.scaling_a_max;
        const double phi0 = rng.uniform() * kTwoPi;
        const double nr = phi0 != 0.0 ? a * std::sin(phi0) / phi0 : rng.uniform();
        std::vector<double> phis(dims);
        for (auto& p : phis) p = rng.uniform() * kTwoPi;
        ++result.strategy_counts[hraha::LocalStrategy::StayAndDisguise];
        keep_if_better(pop[i], hraha::stay_and_disguise(pop[i].position, nr, phis, space), eval);
      } else {
        const std::size_t pairs = (dims + 1) / 2;
        std::vector<double> phis(pairs);
        std::vector<double> phi0s(pairs);
        for (std::size_t k = 0; k < pairs; ++k) {
          phis[k] = rng.uniform() * kTwoPi;
          phi0s[k] = rng.uniform() * kTwoPi;
        }
        const double theta = rng.uniform();
        double r = 0.0;
        for (std::size_t j = 0; j < dims; ++j) {
          const double d = pop.best_member().position[j] - pop[i].position[j];
          r += d * d;
        }
        ++result.strategy_counts[hraha::LocalStrategy::TerritorialForaging];
        keep_if_better(pop[i],
                       hraha::territorial_foraging(pop[i].position, params.territorial_lambda, std::sqrt(r), phis,
                                                   phi0s, theta, space),
                       eval);
      }
    }
    pop.update_best();

    // Reproduction and replacement of the worst foxes.
    hraha::move_closer_reproduce(pop, repro, rng, space, eval);
    ++result.strategy_counts[hraha::LocalStrategy::MoveCloser];

    if (*pop.best_member().fitness <= *elite.fitness) elite = pop.best_member();
    result.history.push_back(*elite.fitness);
  }

  result.best_position = elite.position;
  result.best_fitness = *elite.fitness;
  result.evaluations = eval.count();
  return result;
}

}  // namespace opt::baselines
