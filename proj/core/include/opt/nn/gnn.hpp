#pragma once

#include <cstddef>
#include <vector>

#include "opt/nn/matrix.hpp"

namespace opt::nn {

/// One combine step: leaky_relu(G·weight + bias). weight is e_prev × e_next.
struct GnnWeights {
  Matrix weight;
  std::vector<double> bias;
  double slope = 0.01;
};

enum class Readout { Mean, Sum };

/// adj + I. Throws on a non-square matrix.
Matrix add_self_loops(const Matrix& adj);

/// leaky_relu(adj·d_prev·weight + bias), adj already carrying self loops.
Matrix gnn_block(const Matrix& adj, const Matrix& d_prev, const GnnWeights& w);

/// Applies the blocks in order, then reduces node rows to one vector.
std::vector<double> gnn_forward(const Matrix& adj, const Matrix& d0, const std::vector<GnnWeights>& blocks,
                                Readout readout = Readout::Mean);

std::vector<double> readout(const Matrix& d, Readout kind);

}  // namespace opt::nn
