#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

namespace opt {

/// Minimization objective over a real vector of fixed arity.
///
/// `fn` must be pure: the same vector always yields the same value. Stochastic
/// objectives carry their own seeded generator.
struct Objective {
  std::size_t arity = 0;
  std::function<double(std::span<const double>)> fn;
  std::string name;

  double operator()(std::span<const double> x) const { return fn(x); }
};

/// Wraps a maximization objective so that it can be minimized.
Objective negate(Objective obj);

/// Counts calls and rejects non-finite values.
class Evaluator {
public:
  explicit Evaluator(const Objective& obj) : obj_(&obj) {}

  /// Throws std::domain_error("non-finite fitness") on NaN or infinity, and
  /// std::invalid_argument on arity mismatch.
  double operator()(std::span<const double> x);

  std::size_t count() const { return count_; }
  const Objective& objective() const { return *obj_; }

private:
  const Objective* obj_;
  std::size_t count_ = 0;
};

}  // namespace opt
