#include "opt/baselines/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opt::baselines {

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rastrigin(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  return s;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double ackley(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * std::numbers::pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names{"sphere", "rastrigin", "rosenbrock", "ackley"};
  return names;
}

BenchmarkFn benchmark_fn(std::string_view name, std::size_t dims) {
  if (dims == 0) throw std::invalid_argument("benchmark: dims must be positive");
  if (name == "sphere") return {"sphere", dims, -5.12, 5.12, 0.0, 0.0};
  if (name == "rastrigin") return {"rastrigin", dims, -5.12, 5.12, 0.0, 0.0};
  if (name == "rosenbrock") return {"rosenbrock", dims, -5.0, 10.0, 0.0, 1.0};
  if (name == "ackley") return {"ackley", dims, -32.768, 32.768, 0.0, 0.0};
  throw std::invalid_argument("unknown benchmark function '" + std::string(name) + "'");
}

double benchmark(std::string_view name, std::span<const double> x) {
  if (name == "sphere") return sphere(x);
  if (name == "rastrigin") return rastrigin(x);
  if (name == "rosenbrock") return rosenbrock(x);
  if (name == "ackley") return ackley(x);
  throw std::invalid_argument("unknown benchmark function '" + std::string(name) + "'");
}

Objective BenchmarkFn::objective() const {
  double (*fn)(std::span<const double>) = nullptr;
  if (name == "sphere") fn = &sphere;
  else if (name == "rastrigin") fn = &rastrigin;
  else if (name == "rosenbrock") fn = &rosenbrock;
  else if (name == "ackley") fn = &ackley;
  else throw std::invalid_argument("unknown benchmark function '" + name + "'");
  return Objective{dims, fn, name};
}

}  // namespace opt::baselines
