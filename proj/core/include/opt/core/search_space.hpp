#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace opt {

/// Axis-aligned box [lower, upper] of real decision variables.
class SearchSpace {
public:
  /// Throws std::invalid_argument on length mismatch, empty bounds, or when
  /// lower[j] >= upper[j] for some j.
  SearchSpace(std::vector<double> lower, std::vector<double> upper);

  /// Same bounds on every axis.
  static SearchSpace cube(std::size_t dims, double lo, double hi);

  std::size_t dims() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double lower(std::size_t j) const { return lower_[j]; }
  double upper(std::size_t j) const { return upper_[j]; }
  double width(std::size_t j) const { return upper_[j] - lower_[j]; }

  bool contains(std::span<const double> x) const;

  friend bool operator==(const SearchSpace&, const SearchSpace&) = default;

private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

inline SearchSpace make_search_space(std::vector<double> lower, std::vector<double> upper) {
  return SearchSpace(std::move(lower), std::move(upper));
}

/// Projects each coordinate onto [lower[j], upper[j]].
std::vector<double> clamp(std::span<const double> position, const SearchSpace& space);

/// In-place variant.
void clamp_inplace(std::vector<double>& position, const SearchSpace& space);

}  // namespace opt
