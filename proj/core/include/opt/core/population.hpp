#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opt/core/objective.hpp"
#include "opt/core/rng.hpp"
#include "opt/core/search_space.hpp"

namespace opt {

struct Individual {
  std::vector<double> position;
  std::optional<double> fitness;

  bool evaluated() const { return fitness.has_value(); }

  friend bool operator==(const Individual&, const Individual&) = default;
};

/// Ordered collection of individuals with best-so-far tracking.
///
/// `best` indexes the evaluated member with minimal fitness; ties go to the
/// lowest index. It is meaningless while no member is evaluated.
struct Population {
  std::vector<Individual> members;
  std::size_t best = 0;

  std::size_t size() const { return members.size(); }
  Individual& operator[](std::size_t i) { return members[i]; }
  const Individual& operator[](std::size_t i) const { return members[i]; }

  bool all_evaluated() const;
  /// Recomputes `best` from scratch.
  void update_best();
  /// Index of the evaluated member with maximal fitness (ties: highest index).
  std::size_t worst() const;
  const Individual& best_member() const { return members[best]; }

  friend bool operator==(const Population&, const Population&) = default;
};

/// `size` members drawn uniformly per dimension in [L, U]. Requires size >= 4.
Population init_population(const SearchSpace& space, std::size_t size, Rng& rng);

/// Evaluates every member and refreshes `best`.
Population evaluate(Population pop, const Objective& obj);
/// Same, counting calls through `eval`.
void evaluate_inplace(Population& pop, Evaluator& eval);

/// The k fittest members in ascending fitness order, ties by lower index.
std::vector<Individual> select_best(const Population& pop, std::size_t k);
/// Indices in the same order as select_best.
std::vector<std::size_t> select_best_indices(const Population& pop, std::size_t k);

}  // namespace opt
