#pragma once

#include <cstddef>
#include <vector>

#include "opt/nn/matrix.hpp"

namespace opt::nn {

/// softmax(qu·keᵀ/√d) where d = qu.cols(). Each row sums to 1.
Matrix attention_weights(const Matrix& qu, const Matrix& ke);

/// Scaled dot-product attention: attention_weights(qu, ke)·va.
/// Requires qu.cols() == ke.cols() and ke.rows() == va.rows().
Matrix attention(const Matrix& qu, const Matrix& ke, const Matrix& va);

/// Per-head projections (each d × d/p) and the d × d output map.
struct AttentionWeights {
  std::vector<Matrix> query;
  std::vector<Matrix> key;
  std::vector<Matrix> value;
  Matrix output;

  std::size_t heads() const { return query.size(); }
  std::size_t model_dim() const { return output.rows(); }

  /// Throws std::invalid_argument when d is not divisible by p or a
  /// projection has the wrong shape.
  void validate() const;

  /// p heads whose projections slice the identity, so that concatenating the
  /// heads reproduces x, and an identity output map.
  static AttentionWeights identity(std::size_t d, std::size_t p);
  static AttentionWeights zeros(std::size_t d, std::size_t p);
};

/// concat_i attention(x·w_q[i], x·w_k[i], x·w_v[i]) · w_o.
Matrix multi_head_attention(const Matrix& x, const AttentionWeights& w);

}  // namespace opt::nn
