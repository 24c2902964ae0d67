#include "opt/nn/gumbel.hpp"

#include <cmath>
#include <stdexcept>

#include "opt/nn/activations.hpp"

namespace opt::nn {

GumbelSample gumbel_softmax_st(std::span<const double> logits, double tau, Rng& rng) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("gumbel_softmax_st: tau must be > 0");
  if (logits.empty()) throw std::invalid_argument("gumbel_softmax_st: empty logits");
  std::vector<double> z(logits.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double g = -std::log(-std::log(rng.uniform_open()));
    z[i] = (logits[i] + g) / tau;
  }
  GumbelSample out;
  out.soft = softmax(z);
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.soft.size(); ++i)
    if (out.soft[i] > out.soft[best]) best = i;
  out.hard.assign(out.soft.size(), 0.0);
  out.hard[best] = 1.0;
  return out;
}

}  // namespace opt::nn
