#pragma once

#include <span>
#include <vector>

#include "opt/core/rng.hpp"

namespace opt::nn {

struct GumbelSample {
  std::vector<double> soft;
  std::vector<double> hard;
};

/// soft = softmax((logits + g)/tau) with g = -ln(-ln u), u uniform on (0,1);
/// hard = one-hot argmax of soft, lowest index on ties.
/// Throws std::invalid_argument for tau <= 0 or empty logits.
GumbelSample gumbel_softmax_st(std::span<const double> logits, double tau, Rng& rng);

}  // namespace opt::nn
