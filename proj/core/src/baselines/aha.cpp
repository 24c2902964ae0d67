#include <algorithm>
#include <limits>
#include <stdexcept>

#include "opt/baselines/baselines.hpp"
#include "opt/core/population.hpp"
#include "opt/hraha/operators.hpp"

namespace opt::baselines {

namespace {

// visits(i, j): iterations since bird i last visited source j. The diagonal is
// unused.
class VisitTable {
public:
  explicit VisitTable(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void age_row(std::size_t i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != i) (*this)(i, j) += 1.0;
    }
  }

  // Source i was improved: every other bird now finds it the most neglected.
  void refresh_column(std::size_t i) {
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == i) continue;
      double row_max = -std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < n_; ++c) {
        if (c != r) row_max = std::max(row_max, (*this)(r, c));
      }
      (*this)(r, i) = row_max + 1.0;
    }
  }

  // Most neglected source for bird i; ties go to the fitter source.
  std::size_t target(std::size_t i, const Population& pop) const {
    std::size_t best = i == 0 ? 1 : 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i) continue;
      const double v = (*this)(i, j);
      const double bv = (*this)(i, best);
      if (v > bv || (v == bv && *pop[j].fitness < *pop[best].fitness)) best = j;
    }
    return best;
  }

private:
  std::size_t n_;
  std::vector<double> data_;
};

AhaParams defaults_for(std::size_t pop_size, const AhaParams& params) {
  AhaParams out = params;
  if (!out.migration_coefficient) out.migration_coefficient = 2 * pop_size;
  return out;
}

}  // namespace

OptimizationResult run_aha(const Objective& obj, const SearchSpace& space, std::size_t pop_size,
                           std::size_t max_iters, Rng& rng, const AhaParams& raw_params) {
  if (obj.arity != space.dims()) throw std::invalid_argument("aha: objective arity does not match search space");
  const AhaParams params = defaults_for(pop_size, raw_params);
  const std::size_t dims = space.dims();
  Evaluator eval(obj);

  Population pop = init_population(space, pop_size, rng);
  evaluate_inplace(pop, eval);
  VisitTable visits(pop_size);
  hraha::MigrationGate gate{*params.migration_coefficient, 0};
  Individual elite = pop.best_member();

  OptimizationResult result;
  for (std::size_t t = 0; t < max_iters; ++t) {
    for (std::size_t i = 0; i < pop_size; ++i) {
      const double r = rng.uniform();
      hraha::FlightKind flight = hraha::FlightKind::Axial;
      if (r < 1.0 / 3.0) flight = hraha::FlightKind::Diagonal;
      else if (r > 2.0 / 3.0) flight = hraha::FlightKind::Omnidirectional;
      ++result.strategy_counts[flight];
      const auto mask = hraha::flight_mask(flight, dims, rng);

      std::vector<double> candidate(dims);
      if (rng.uniform() < 0.5) {
        // Guided foraging.
        const std::size_t target = visits.target(i, pop);
        const double a = rng.normal();
        const auto& xt = pop[target].position;
        const auto& xi = pop[i].position;
        for (std::size_t j = 0; j < dims; ++j) candidate[j] = xt[j] + a * mask[j] * (xi[j] - xt[j]);
        clamp_inplace(candidate, space);
        const double f = eval(candidate);
        visits.age_row(i);
        visits(i, target) = 0.0;
        if (f < *pop[i].fitness) {
          pop[i].position = std::move(candidate);
          pop[i].fitness = f;
          visits.refresh_column(i);
        }
      } else {
        // Territorial foraging.
        const double b = rng.normal();
        const auto& xi = pop[i].position;
        for (std::size_t j = 0; j < dims; ++j) candidate[j] = xi[j] + b * mask[j] * xi[j];
        clamp_inplace(candidate, space);
        const double f = eval(candidate);
        visits.age_row(i);
        if (f < *pop[i].fitness) {
          pop[i].position = std::move(candidate);
          pop[i].fitness = f;
          visits.refresh_column(i);
        }
      }
    }

    pop.update_best();
    const std::size_t worst = pop.worst();
    if (hraha::migrate_worst(pop, space, rng, gate, t + 1, eval)) {
      ++result.strategy_counts[hraha::LocalStrategy::Migration];
      visits.age_row(worst);
      visits.refresh_column(worst);
    }

    if (*pop.best_member().fitness <= *elite.fitness) elite = pop.best_member();
    result.history.push_back(*elite.fitness);
  }

  result.best_position = elite.position;
  result.best_fitness = *elite.fitness;
  result.evaluations = eval.count();
  return result;
}

}  // namespace opt::baselines
