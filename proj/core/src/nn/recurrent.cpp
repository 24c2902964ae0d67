#include "opt/nn/recurrent.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "opt/nn/activations.hpp"

namespace opt::nn {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                                std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
}

void require_len(const Vec& v, std::size_t n, const char* what) {
  if (v.size() != n) throw std::invalid_argument(std::string(what) + ": bias length mismatch");
}

// m·a + n·b + bias
Vec affine2(const Matrix& m, std::span<const double> a, const Matrix& n, std::span<const double> b,
            const Vec& bias) {
  Vec y = matvec(m, a);
  const Vec z = matvec(n, b);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += z[i] + bias[i];
  return y;
}

Vec hadamard(std::span<const double> a, std::span<const double> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

void check_inputs(std::size_t in, std::size_t hid, std::span<const double> x, std::span<const double> h,
                  const char* what) {
  if (x.size() != in) throw std::invalid_argument(std::string(what) + ": input length mismatch");
  if (h.size() != hid) throw std::invalid_argument(std::string(what) + ": hidden length mismatch");
}

}  // namespace

void GruWeights::validate() const {
  const std::size_t in = input_dim(), hid = hidden_dim();
  require_shape(g_reset, hid, in, "gru G_r");
  require_shape(g_update, hid, in, "gru G_z");
  require_shape(g_candidate, hid, in, "gru G_h");
  require_shape(w_reset, hid, hid, "gru W_r");
  require_shape(w_update, hid, hid, "gru W_z");
  require_shape(w_candidate, hid, hid, "gru W");
  require_len(b_reset, hid, "gru");
  require_len(b_update, hid, "gru");
  require_len(b_candidate, hid, "gru");
}

GruWeights GruWeights::zeros(std::size_t input, std::size_t hidden) {
  GruWeights w;
  w.g_reset = w.g_update = w.g_candidate = Matrix(hidden, input);
  w.w_reset = w.w_update = w.w_candidate = Matrix(hidden, hidden);
  w.b_reset = w.b_update = w.b_candidate = Vec(hidden, 0.0);
  return w;
}

GruTrace gru_trace(std::span<const double> x, std::span<const double> h_prev, const GruWeights& w) {
  w.validate();
  check_inputs(w.input_dim(), w.hidden_dim(), x, h_prev, "gru_step");
  GruTrace t;
  t.reset = affine2(w.g_reset, x, w.w_reset, h_prev, w.b_reset);
  t.update = affine2(w.g_update, x, w.w_update, h_prev, w.b_update);
  for (double& v : t.reset) v = sigmoid(v);
  for (double& v : t.update) v = sigmoid(v);
  const Vec gated = hadamard(t.reset, h_prev);
  t.candidate = affine2(w.g_candidate, x, w.w_candidate, gated, w.b_candidate);
  for (double& v : t.candidate) v = std::tanh(v);
  t.h.resize(h_prev.size());
  for (std::size_t i = 0; i < t.h.size(); ++i) {
    t.h[i] = (1.0 - t.update[i]) * h_prev[i] + t.update[i] * t.candidate[i];
  }
  return t;
}

Vec gru_step(std::span<const double> x, std::span<const double> h_prev, const GruWeights& w) {
  return gru_trace(x, h_prev, w).h;
}

void LstmWeights::validate() const {
  const std::size_t in = input_dim(), hid = hidden_dim();
  for (const Matrix* m : {&x_forget, &x_input, &x_output, &x_cell}) require_shape(*m, hid, in, "lstm WE_x*");
  for (const Matrix* m : {&h_forget, &h_input, &h_output, &h_cell, &g_forget, &g_input, &g_output}) {
    require_shape(*m, hid, hid, "lstm WE_h*/WE_g*");
  }
  for (const Vec* b : {&b_forget, &b_input, &b_output, &b_cell}) require_len(*b, hid, "lstm");
  if (candidate == LstmCandidate::GruCoupled) {
    require_shape(x_reset, hid, in, "lstm reset input map");
    require_shape(h_reset, hid, hid, "lstm reset recurrent map");
    require_len(b_reset, hid, "lstm reset");
  }
}

LstmWeights LstmWeights::zeros(std::size_t input, std::size_t hidden, LstmCandidate candidate) {
  LstmWeights w;
  w.x_forget = w.x_input = w.x_output = w.x_cell = Matrix(hidden, input);
  w.h_forget = w.h_input = w.h_output = w.h_cell = Matrix(hidden, hidden);
  w.g_forget = w.g_input = w.g_output = Matrix(hidden, hidden);
  w.b_forget = w.b_input = w.b_output = w.b_cell = Vec(hidden, 0.0);
  w.candidate = candidate;
  if (candidate == LstmCandidate::GruCoupled) {
    w.x_reset = Matrix(hidden, input);
    w.h_reset = Matrix(hidden, hidden);
    w.b_reset = Vec(hidden, 0.0);
  }
  return w;
}

LstmTrace lstm_trace(std::span<const double> x, const LstmState& prev, const LstmWeights& w) {
  w.validate();
  check_inputs(w.input_dim(), w.hidden_dim(), x, prev.h, "lstm_step");
  if (prev.s.size() != w.hidden_dim()) throw std::invalid_argument("lstm_step: cell length mismatch");

  auto gate = [&](const Matrix& wx, const Matrix& wh, const Matrix& wg, const Vec& b) {
    Vec g = affine2(wx, x, wh, prev.h, b);
    const Vec peep = matvec(wg, prev.s);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = sigmoid(g[i] + peep[i]);
    return g;
  };

  LstmTrace t;
  t.forget = gate(w.x_forget, w.h_forget, w.g_forget, w.b_forget);
  t.input = gate(w.x_input, w.h_input, w.g_input, w.b_input);
  t.output = gate(w.x_output, w.h_output, w.g_output, w.b_output);

  if (w.candidate == LstmCandidate::GruCoupled) {
    t.reset = affine2(w.x_reset, x, w.h_reset, prev.h, w.b_reset);
    for (double& v : t.reset) v = sigmoid(v);
    t.candidate = affine2(w.x_cell, x, w.h_cell, hadamard(t.reset, prev.h), w.b_cell);
  } else {
    t.candidate = affine2(w.x_cell, x, w.h_cell, prev.h, w.b_cell);
  }
  for (double& v : t.candidate) v = std::tanh(v);

  const std::size_t n = w.hidden_dim();
  t.state.s.resize(n);
  t.state.h.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.state.s[i] = t.forget[i] * prev.s[i] + t.input[i] * t.candidate[i];
    t.state.h[i] = t.output[i] * std::tanh(t.state.s[i]);
  }
  return t;
}

LstmState lstm_step(std::span<const double> x, const LstmState& prev, const LstmWeights& w) {
  return lstm_trace(x, prev, w).state;
}

BiLstmStep bilstm_step(std::span<const double> x_fwd, std::span<const double> x_bwd,
                       const LstmState& fwd_prev, const LstmState& bwd_prev, const BiLstmWeights& w) {
  BiLstmStep out;
  out.forward = lstm_step(x_fwd, fwd_prev, w.forward);
  out.backward = lstm_step(x_bwd, bwd_prev, w.backward);
  out.h_concat = out.forward.h;
  out.h_concat.insert(out.h_concat.end(), out.backward.h.begin(), out.backward.h.end());
  return out;
}

std::vector<Vec> bilstm_sequence(const std::vector<Vec>& xs, const BiLstmWeights& w) {
  const std::size_t T = xs.size();
  const std::size_t hf = w.forward.hidden_dim(), hb = w.backward.hidden_dim();
  std::vector<Vec> fwd(T), bwd(T);
  LstmState f{Vec(hf, 0.0), Vec(hf, 0.0)};
  for (std::size_t t = 0; t < T; ++t) {
    f = lstm_step(xs[t], f, w.forward);
    fwd[t] = f.h;
  }
  LstmState b{Vec(hb, 0.0), Vec(hb, 0.0)};
  for (std::size_t k = 0; k < T; ++k) {
    const std::size_t t = T - 1 - k;
    b = lstm_step(xs[t], b, w.backward);
    bwd[t] = b.h;
  }
  std::vector<Vec> out(T);
  for (std::size_t t = 0; t < T; ++t) {
    out[t] = fwd[t];
    out[t].insert(out[t].end(), bwd[t].begin(), bwd[t].end());
  }
  return out;
}

}  // namespace opt::nn
