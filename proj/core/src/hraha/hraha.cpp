#include "opt/hraha/hraha.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opt::hraha {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  return std::sqrt(s);
}

void greedy_replace(Individual& member, std::vector<double> candidate, Evaluator& eval) {
  const double f = eval(candidate);
  if (f <= *member.fitness) {
    member.position = std::move(candidate);
    member.fitness = f;
  }
}

void apply_stay_and_disguise(Individual& member, const HrahaConfig& cfg, Rng& rng, const SearchSpace& space,
                             Evaluator& eval) {
  const double theta = rng.uniform();
  const double nr = cfg.scaling_a * theta;
  std::vector<double> phis(space.dims());
  for (auto& p : phis) p = rng.uniform() * kTwoPi;
  greedy_replace(member, stay_and_disguise(member.position, nr, phis, space), eval);
}

void apply_territorial(Individual& member, const Individual& best, const HrahaConfig& cfg, Rng& rng,
                       const SearchSpace& space, Evaluator& eval) {
  const std::size_t pairs = (space.dims() + 1) / 2;
  std::vector<double> phis(pairs);
  std::vector<double> phi0s(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    phis[k] = rng.uniform() * kTwoPi;
    phi0s[k] = rng.uniform() * kTwoPi;
  }
  const double theta = rng.uniform();
  const double r = distance(member.position, best.position);
  greedy_replace(member,
                 territorial_foraging(member.position, cfg.territorial_lambda, r, phis, phi0s, theta, space), eval);
}

}  // namespace

OptimizationResult run(const Objective& obj, const SearchSpace& space, const HrahaConfig& cfg,
                       std::size_t pop_size, Rng& rng) {
  cfg.validate();
  if (obj.arity != space.dims()) {
    throw std::invalid_argument("hraha: objective arity does not match search space");
  }

  Evaluator eval(obj);
  OptimizationResult result;
  Population pop = init_population(space, pop_size, rng);
  evaluate_inplace(pop, eval);

  Individual elite = pop.best_member();
  MigrationGate gate{cfg.migration_coefficient.value_or(2 * pop_size), 0};

  for (std::size_t t = 0; t < cfg.max_iters; ++t) {
    const double alpha = compute_alpha(pop, cfg.omega, t, cfg.max_iters);
    const FlightKind flight = select_flight(alpha, cfg.alpha_thresholds);
    const Individual leader = pop.best_member();
    global_search_step(pop, leader, alpha, flight, rng, space, eval, &result.strategy_counts);

    for (std::size_t i = 0; i < pop.size(); ++i) {
      const LocalStrategy strategy = classify_delta(draw_delta(rng));
      ++result.strategy_counts[strategy];
      switch (strategy) {
        case LocalStrategy::None:
          break;
        case LocalStrategy::StayAndDisguise:
          apply_stay_and_disguise(pop[i], cfg, rng, space, eval);
          break;
        case LocalStrategy::TerritorialForaging:
          apply_territorial(pop[i], pop.best_member(), cfg, rng, space, eval);
          break;
        case LocalStrategy::Migration:
          migrate_worst(pop, space, rng, gate, t, eval);
          break;
        case LocalStrategy::MoveCloser:
          move_closer_reproduce(pop, cfg, rng, space, eval);
          break;
      }
      pop.update_best();
    }

    pop.update_best();
    if (cfg.elitism && *pop.best_member().fitness > *elite.fitness) {
      pop[pop.worst()] = elite;
      pop.update_best();
    }
    if (*pop.best_member().fitness <= *elite.fitness) elite = pop.best_member();

    result.history.push_back(*pop.best_member().fitness);
    if (cfg.target_fitness && *elite.fitness <= *cfg.target_fitness) break;
  }

  result.best_position = elite.position;
  result.best_fitness = *elite.fitness;
  result.evaluations = eval.count();
  return result;
}

}  // namespace opt::hraha
