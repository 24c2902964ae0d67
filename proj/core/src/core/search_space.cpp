#include "opt/core/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace opt {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw std::invalid_argument("search space: dimension mismatch (" + std::to_string(lower_.size()) +
                                " lower vs " + std::to_string(upper_.size()) + " upper)");
  }
  if (lower_.empty()) throw std::invalid_argument("search space: zero dimensions");
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j])) {
      throw std::invalid_argument("search space: non-finite bound at j=" + std::to_string(j));
    }
    if (!(lower_[j] < upper_[j])) {
      throw std::invalid_argument("inverted bound at j=" + std::to_string(j));
    }
  }
}

SearchSpace SearchSpace::cube(std::size_t dims, double lo, double hi) {
  return SearchSpace(std::vector<double>(dims, lo), std::vector<double>(dims, hi));
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != dims()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) return false;
  }
  return true;
}

std::vector<double> clamp(std::span<const double> position, const SearchSpace& space) {
  std::vector<double> out(position.begin(), position.end());
  clamp_inplace(out, space);
  return out;
}

void clamp_inplace(std::vector<double>& position, const SearchSpace& space) {
  if (position.size() != space.dims()) {
    throw std::invalid_argument("clamp: length mismatch (" + std::to_string(position.size()) + " vs " +
                                std::to_string(space.dims()) + ")");
  }
  for (std::size_t j = 0; j < position.size(); ++j) {
    // NaN would survive std::clamp; pin it to the lower bound instead.
    if (std::isnan(position[j])) {
      position[j] = space.lower(j);
      continue;
    }
    position[j] = std::clamp(position[j], space.lower(j), space.upper(j));
  }
}

}  // namespace opt
