#include <stdexcept>

#include "opt/baselines/baselines.hpp"
#include "opt/core/population.hpp"

namespace opt::baselines {

OptimizationResult random_search(const Objective& obj, const SearchSpace& space, std::size_t pop_size,
                                 std::size_t max_iters, Rng& rng) {
  if (obj.arity != space.dims()) {
    throw std::invalid_argument("random search: objective arity does not match search space");
  }
  Evaluator eval(obj);
  Population batch = init_population(space, pop_size, rng);
  evaluate_inplace(batch, eval);
  Individual elite = batch.best_member();

  OptimizationResult result;
  for (std::size_t t = 0; t < max_iters; ++t) {
    batch = init_population(space, pop_size, rng);
    evaluate_inplace(batch, eval);
    if (*batch.best_member().fitness < *elite.fitness) elite = batch.best_member();
    result.history.push_back(*elite.fitness);
  }
  result.best_position = elite.position;
  result.best_fitness = *elite.fitness;
  result.evaluations = eval.count();
  return result;
}

}  // namespace opt::baselines
