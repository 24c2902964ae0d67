#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "opt/core/search_space.hpp"

namespace opt::harness {

struct ContinuousDim {
  double lo = 0.0;
  double hi = 1.0;
};

/// Encoded on [lo - 0.5, hi + 0.5]; decoded by rounding half up, then clamping.
struct IntegerDim {
  std::int64_t lo = 0;
  std::int64_t hi = 1;
};

/// Encoded on [0, k]; decoded by floor, clamped to k - 1. Choice i encodes to
/// i + 0.5.
struct CategoricalDim {
  std::vector<std::string> choices;
};

using DimKind = std::variant<ContinuousDim, IntegerDim, CategoricalDim>;
using ParamValue = std::variant<double, std::int64_t, std::string>;

struct HyperparamDim {
  std::string name;
  DimKind kind;
};

class HyperparamSpace {
public:
  HyperparamSpace() = default;
  /// Throws std::invalid_argument on duplicate names, lo >= hi for continuous,
  /// lo > hi for integer, or an empty categorical list.
  explicit HyperparamSpace(std::vector<HyperparamDim> dims);

  std::size_t size() const { return dims_.size(); }
  const std::vector<HyperparamDim>& dims() const { return dims_; }
  /// Index of the named dimension; throws std::out_of_range when absent.
  std::size_t index_of(const std::string& name) const;

  SearchSpace box() const;
  std::vector<ParamValue> decode(std::span<const double> x) const;
  /// Throws std::invalid_argument when a value has the wrong type or lies
  /// outside its dimension.
  std::vector<double> encode(std::span<const ParamValue> values) const;

private:
  std::vector<HyperparamDim> dims_;
};

std::string to_string(const ParamValue& v);

}  // namespace opt::harness
