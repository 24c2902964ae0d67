#include <algorithm>
#include <stdexcept>

#include "opt/baselines/baselines.hpp"
#include "opt/core/population.hpp"

namespace opt::baselines {

OptimizationResult run_pso(const Objective& obj, const SearchSpace& space, std::size_t pop_size,
                           std::size_t max_iters, Rng& rng, const PsoParams& params) {
  if (obj.arity != space.dims()) throw std::invalid_argument("pso: objective arity does not match search space");
  const std::size_t dims = space.dims();
  Evaluator eval(obj);

  Population swarm = init_population(space, pop_size, rng);
  evaluate_inplace(swarm, eval);
  Population personal = swarm;

  std::vector<double> vmax(dims);
  for (std::size_t j = 0; j < dims; ++j) vmax[j] = params.max_velocity_fraction * space.width(j);
  std::vector<std::vector<double>> velocity(pop_size, std::vector<double>(dims, 0.0));

  OptimizationResult result;
  for (std::size_t t = 0; t < max_iters; ++t) {
    const std::vector<double> global = personal.best_member().position;
    for (std::size_t i = 0; i < pop_size; ++i) {
      auto& x = swarm[i].position;
      auto& v = velocity[i];
      const auto& p = personal[i].position;
      for (std::size_t j = 0; j < dims; ++j) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        v[j] = params.inertia * v[j] + params.cognitive * r1 * (p[j] - x[j]) + params.social * r2 * (global[j] - x[j]);
        v[j] = std::clamp(v[j], -vmax[j], vmax[j]);
        x[j] += v[j];
        if (x[j] < space.lower(j) || x[j] > space.upper(j)) {
          x[j] = std::clamp(x[j], space.lower(j), space.upper(j));
          v[j] = 0.0;
        }
      }
      swarm[i].fitness = eval(x);
      if (*swarm[i].fitness <= *personal[i].fitness) personal[i] = swarm[i];
    }
    personal.update_best();
    result.history.push_back(*personal.best_member().fitness);
  }

  result.best_position = personal.best_member().position;
  result.best_fitness = *personal.best_member().fitness;
  result.evaluations = eval.count();
  return result;
}

}  // namespace opt::baselines
