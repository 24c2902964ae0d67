#include "opt/nn/attention.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "opt/nn/activations.hpp"

namespace opt::nn {

Matrix attention_weights(const Matrix& qu, const Matrix& ke) {
  if (qu.cols() != ke.cols()) throw std::invalid_argument("attention: query/key width mismatch");
  if (qu.cols() == 0) throw std::invalid_argument("attention: zero key dimension");
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(ke.cols()));
  return softmax_rows(scale(matmul(qu, ke.transpose()), inv_sqrt_d));
}

Matrix attention(const Matrix& qu, const Matrix& ke, const Matrix& va) {
  if (ke.rows() != va.rows()) throw std::invalid_argument("attention: key/value row count mismatch");
  return matmul(attention_weights(qu, ke), va);
}

void AttentionWeights::validate() const {
  const std::size_t p = heads();
  const std::size_t d = output.rows();
  if (p == 0) throw std::invalid_argument("attention weights: no heads");
  if (output.cols() != d) throw std::invalid_argument("attention weights: output map must be d x d");
  if (d % p != 0) {
    throw std::invalid_argument("attention weights: d=" + std::to_string(d) + " not divisible by p=" +
                                std::to_string(p));
  }
  if (key.size() != p || value.size() != p) throw std::invalid_argument("attention weights: head count mismatch");
  const std::size_t dh = d / p;
  for (std::size_t h = 0; h < p; ++h) {
    for (const Matrix* m : {&query[h], &key[h], &value[h]}) {
      if (m->rows() != d || m->cols() != dh) {
        throw std::invalid_argument("attention weights: head projection must be d x d/p");
      }
    }
  }
}

AttentionWeights AttentionWeights::identity(std::size_t d, std::size_t p) {
  if (p == 0 || d % p != 0) throw std::invalid_argument("attention weights: d not divisible by p");
  AttentionWeights w;
  const std::size_t dh = d / p;
  const Matrix eye = Matrix::identity(d);
  for (std::size_t h = 0; h < p; ++h) {
    w.query.push_back(column_block(eye, h * dh, dh));
    w.key.push_back(column_block(eye, h * dh, dh));
    w.value.push_back(column_block(eye, h * dh, dh));
  }
  w.output = eye;
  return w;
}

AttentionWeights AttentionWeights::zeros(std::size_t d, std::size_t p) {
  if (p == 0 || d % p != 0) throw std::invalid_argument("attention weights: d not divisible by p");
  AttentionWeights w;
  const std::size_t dh = d / p;
  for (std::size_t h = 0; h < p; ++h) {
    w.query.emplace_back(d, dh);
    w.key.emplace_back(d, dh);
    w.value.emplace_back(d, dh);
  }
  w.output = Matrix(d, d);
  return w;
}

Matrix multi_head_attention(const Matrix& x, const AttentionWeights& w) {
  w.validate();
  if (x.cols() != w.model_dim()) throw std::invalid_argument("multi_head_attention: input width != d");
  std::vector<Matrix> heads;
  heads.reserve(w.heads());
  for (std::size_t h = 0; h < w.heads(); ++h) {
    heads.push_back(attention(matmul(x, w.query[h]), matmul(x, w.key[h]), matmul(x, w.value[h])));
  }
  return matmul(hconcat(heads), w.output);
}

}  // namespace opt::nn
