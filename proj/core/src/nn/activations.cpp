#include "opt/nn/activations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opt::nn {

double sigmoid(double a) {
  if (a >= 0.0) return 1.0 / (1.0 + std::exp(-a));
  const double e = std::exp(a);
  return e / (1.0 + e);
}

double gelu(double a) { return 0.5 * a * (1.0 + std::erf(a / std::numbers::sqrt2)); }

double relu(double a) { return a >= 0.0 ? a : 0.0; }

double leaky_relu(double a, double slope) {
  if (!(slope > 0.0 && slope < 1.0)) throw std::invalid_argument("leaky_relu: slope must lie in (0, 1)");
  return std::max(slope * a, a);
}

Matrix gelu(Matrix m) {
  for (double& v : m.data()) v = gelu(v);
  return m;
}

Matrix relu(Matrix m) {
  for (double& v : m.data()) v = relu(v);
  return m;
}

Matrix leaky_relu(Matrix m, double slope) {
  if (!(slope > 0.0 && slope < 1.0)) throw std::invalid_argument("leaky_relu: slope must lie in (0, 1)");
  for (double& v : m.data()) v = std::max(slope * v, v);
  return m;
}

std::vector<double> softmax(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  if (out.empty()) return out;
  for (double x : out)
    if (!std::isfinite(x)) throw std::invalid_argument("softmax: non-finite input");
  const double mx = *std::max_element(out.begin(), out.end());
  double sum = 0.0;
  for (double& x : out) {
    x = std::exp(x - mx);
    sum += x;
  }
  for (double& x : out) x /= sum;
  return out;
}

Matrix softmax_rows(Matrix m) {
  if (!m.all_finite()) throw std::invalid_argument("softmax_rows: non-finite input");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    const auto sm = softmax(row);
    std::copy(sm.begin(), sm.end(), row.begin());
  }
  return m;
}

}  // namespace opt::nn
