#pragma once

#include <cstddef>
#include <vector>

#include "opt/nn/attention.hpp"
#include "opt/nn/matrix.hpp"

namespace opt::nn {

/// Position-wise gelu(x·w1 + b1)·w2 + b2. w1 is d × hidden, w2 is hidden × d.
struct FeedForward {
  Matrix w1;
  std::vector<double> b1;
  Matrix w2;
  std::vector<double> b2;

  static FeedForward zeros(std::size_t d, std::size_t hidden);
};

Matrix feed_forward(const Matrix& x, const FeedForward& ffn);

/// y = x + MHSA(x); out = y + FFN(y). Output shape equals x's shape.
Matrix encoder_layer(const Matrix& x, const AttentionWeights& attn, const FeedForward& ffn);

}  // namespace opt::nn
