#include "opt/core/population.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace opt {

Objective negate(Objective obj) {
  auto inner = std::move(obj.fn);
  obj.fn = [inner = std::move(inner)](std::span<const double> x) { return -inner(x); };
  obj.name = "-" + obj.name;
  return obj;
}

double Evaluator::operator()(std::span<const double> x) {
  if (x.size() != obj_->arity) {
    throw std::invalid_argument("objective arity mismatch: expected " + std::to_string(obj_->arity) +
                                ", got " + std::to_string(x.size()));
  }
  ++count_;
  const double f = obj_->fn(x);
  if (!std::isfinite(f)) throw std::domain_error("non-finite fitness");
  return f;
}

bool Population::all_evaluated() const {
  return std::all_of(members.begin(), members.end(), [](const Individual& m) { return m.evaluated(); });
}

void Population::update_best() {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!members[i].fitness) continue;
    if (!idx || *members[i].fitness < *members[*idx].fitness) idx = i;
  }
  best = idx.value_or(0);
}

std::size_t Population::worst() const {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!members[i].fitness) continue;
    if (!idx || *members[i].fitness >= *members[*idx].fitness) idx = i;
  }
  if (!idx) throw std::logic_error("worst: population has no evaluated member");
  return *idx;
}

Population init_population(const SearchSpace& space, std::size_t size, Rng& rng) {
  if (size < 4) {
    throw std::invalid_argument("population size must be at least 4, got " + std::to_string(size));
  }
  Population pop;
  pop.members.resize(size);
  for (auto& m : pop.members) {
    m.position.resize(space.dims());
    for (std::size_t j = 0; j < space.dims(); ++j) {
      m.position[j] = space.lower(j) + rng.uniform() * space.width(j);
    }
  }
  return pop;
}

void evaluate_inplace(Population& pop, Evaluator& eval) {
  for (auto& m : pop.members) m.fitness = eval(m.position);
  pop.update_best();
}

Population evaluate(Population pop, const Objective& obj) {
  Evaluator eval(obj);
  evaluate_inplace(pop, eval);
  return pop;
}

std::vector<std::size_t> select_best_indices(const Population& pop, std::size_t k) {
  if (k > pop.size()) {
    throw std::invalid_argument("select_best: k=" + std::to_string(k) + " exceeds population size " +
                                std::to_string(pop.size()));
  }
  if (!pop.all_evaluated()) throw std::invalid_argument("select_best: unevaluated member present");
  std::vector<std::size_t> idx(pop.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return *pop[a].fitness < *pop[b].fitness; });
  idx.resize(k);
  return idx;
}

std::vector<Individual> select_best(const Population& pop, std::size_t k) {
  std::vector<Individual> out;
  for (std::size_t i : select_best_indices(pop, k)) out.push_back(pop[i]);
  return out;
}

}  // namespace opt
