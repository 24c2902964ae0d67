#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opt/core/objective.hpp"
#include "opt/core/search_space.hpp"

namespace opt::baselines {

/// Textbook test function with its canonical box and known optimum.
struct BenchmarkFn {
  std::string name;
  std::size_t dims = 0;
  double lower = 0.0;
  double upper = 0.0;
  double optimum_value = 0.0;
  /// Coordinate of the optimum, repeated on every axis.
  double optimum_coordinate = 0.0;

  SearchSpace space() const { return SearchSpace::cube(dims, lower, upper); }
  std::vector<double> optimum_location() const { return std::vector<double>(dims, optimum_coordinate); }
  Objective objective() const;
};

/// Names accepted by benchmark(): sphere, rastrigin, rosenbrock, ackley.
const std::vector<std::string>& benchmark_names();

/// Throws std::invalid_argument for an unknown name or zero dims.
BenchmarkFn benchmark_fn(std::string_view name, std::size_t dims);

/// Value of the named function at x. Throws on unknown name.
double benchmark(std::string_view name, std::span<const double> x);

double sphere(std::span<const double> x);
double rastrigin(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double ackley(std::span<const double> x);

}  // namespace opt::baselines
