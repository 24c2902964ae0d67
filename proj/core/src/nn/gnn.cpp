#include "opt/nn/gnn.hpp"

#include <stdexcept>

#include "opt/nn/activations.hpp"

namespace opt::nn {

Matrix add_self_loops(const Matrix& adj) {
  if (adj.rows() != adj.cols()) throw std::invalid_argument("add_self_loops: adjacency must be square");
  Matrix out = adj;
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) += 1.0;
  return out;
}

Matrix gnn_block(const Matrix& adj, const Matrix& d_prev, const GnnWeights& w) {
  if (adj.rows() != adj.cols()) throw std::invalid_argument("gnn_block: adjacency must be square");
  if (adj.cols() != d_prev.rows()) throw std::invalid_argument("gnn_block: adjacency/node count mismatch");
  if (w.weight.rows() != d_prev.cols()) throw std::invalid_argument("gnn_block: weight rows != feature dim");
  const Matrix g = matmul(adj, d_prev);
  return leaky_relu(add_row_bias(matmul(g, w.weight), w.bias), w.slope);
}

std::vector<double> readout(const Matrix& d, Readout kind) {
  std::vector<double> out(d.cols(), 0.0);
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) out[c] += d(r, c);
  if (kind == Readout::Mean) {
    if (d.rows() == 0) throw std::invalid_argument("readout: mean of zero nodes");
    for (double& v : out) v /= static_cast<double>(d.rows());
  }
  return out;
}

std::vector<double> gnn_forward(const Matrix& adj, const Matrix& d0, const std::vector<GnnWeights>& blocks,
                                Readout kind) {
  if (adj.rows() != adj.cols() || adj.cols() != d0.rows()) {
    throw std::invalid_argument("gnn_forward: adjacency/node count mismatch");
  }
  Matrix d = d0;
  for (const auto& b : blocks) d = gnn_block(adj, d, b);
  return readout(d, kind);
}

}  // namespace opt::nn
