#include "opt/nn/encoder.hpp"

#include <stdexcept>

#include "opt/nn/activations.hpp"

namespace opt::nn {

FeedForward FeedForward::zeros(std::size_t d, std::size_t hidden) {
  return FeedForward{Matrix(d, hidden), std::vector<double>(hidden, 0.0), Matrix(hidden, d),
                     std::vector<double>(d, 0.0)};
}

Matrix feed_forward(const Matrix& x, const FeedForward& ffn) {
  if (ffn.w1.rows() != x.cols() || ffn.w2.rows() != ffn.w1.cols()) {
    throw std::invalid_argument("feed_forward: shape mismatch");
  }
  const Matrix hidden = gelu(add_row_bias(matmul(x, ffn.w1), ffn.b1));
  return add_row_bias(matmul(hidden, ffn.w2), ffn.b2);
}

Matrix encoder_layer(const Matrix& x, const AttentionWeights& attn, const FeedForward& ffn) {
  if (ffn.w2.cols() != x.cols()) throw std::invalid_argument("encoder_layer: feed-forward output width != d");
  const Matrix y = add(x, multi_head_attention(x, attn));
  return add(y, feed_forward(y, ffn));
}

}  // namespace opt::nn
