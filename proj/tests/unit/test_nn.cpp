#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "opt/core/rng.hpp"
#include "opt/nn/activations.hpp"
#include "opt/nn/attention.hpp"
#include "opt/nn/encoder.hpp"
#include "opt/nn/gnn.hpp"
#include "opt/nn/gumbel.hpp"
#include "opt/nn/recurrent.hpp"

using namespace opt::nn;
using Grid = std::vector<std::vector<double>>;

namespace {

// Plain nested-vector oracles, independent of Matrix.

Grid to_grid(const Matrix& m) {
  Grid g(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

Grid mm(const Grid& a, const Grid& b) {
  Grid out(a.size(), std::vector<double>(b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Grid attention_oracle(const Grid& q, const Grid& k, const Grid& v) {
  const double d = static_cast<double>(q[0].size());
  Grid out(q.size(), std::vector<double>(v[0].size(), 0.0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::vector<double> s(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) {
      double dot = 0;
      for (std::size_t c = 0; c < q[i].size(); ++c) dot += q[i][c] * k[j][c];
      s[j] = dot / std::sqrt(d);
    }
    const double mx = *std::max_element(s.begin(), s.end());
    double z = 0;
    for (auto& e : s) z += (e = std::exp(e - mx));
    for (std::size_t j = 0; j < k.size(); ++j)
      for (std::size_t c = 0; c < v[0].size(); ++c) out[i][c] += s[j] / z * v[j][c];
  }
  return out;
}

double sig(double a) { return 1.0 / (1.0 + std::exp(-a)); }

std::vector<double> mv(const Matrix& m, const std::vector<double>& x) {
  std::vector<double> y(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
  return y;
}

Matrix random_matrix(std::size_t r, std::size_t c, opt::Rng& rng, double scale = 1.0) {
  Matrix m(r, c);
  for (auto& v : m.data()) v = rng.uniform(-scale, scale);
  return m;
}

std::vector<double> random_vec(std::size_t n, opt::Rng& rng, double scale = 1.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-scale, scale);
  return v;
}

void expect_grid_near(const Matrix& got, const Grid& want, double tol = 1e-12) {
  ASSERT_EQ(got.rows(), want.size());
  for (std::size_t r = 0; r < want.size(); ++r) {
    ASSERT_EQ(got.cols(), want[r].size());
    for (std::size_t c = 0; c < want[r].size(); ++c) EXPECT_NEAR(got(r, c), want[r][c], tol) << r << "," << c;
  }
}

void expect_vec_near(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-12) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << i;
}

}  // namespace

TEST(Matrix, MatmulMatchesOracle) {
  opt::Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_matrix(1 + rng.uniform_index(5), 1 + rng.uniform_index(8), rng);
    const auto b = random_matrix(a.cols(), 1 + rng.uniform_index(8), rng);
    expect_grid_near(matmul(a, b), mm(to_grid(a), to_grid(b)));
  }
  EXPECT_THROW(matmul(Matrix(2, 3), Matrix(2, 3)), std::invalid_argument);
}

TEST(Softmax, Examples) {
  expect_grid_near(softmax_rows(Matrix{{0, 0}}), {{0.5, 0.5}});
  const auto big = softmax_rows(Matrix{{1000, 0}});
  EXPECT_NEAR(big(0, 0), 1.0, 1e-15);
  EXPECT_TRUE(big.all_finite());
  expect_grid_near(softmax_rows(Matrix{{std::log(2.0), 0}}), {{2.0 / 3.0, 1.0 / 3.0}});
  EXPECT_THROW(softmax_rows(Matrix{{NAN, 0}}), std::invalid_argument);
}

TEST(Attention, DegenerateCases) {
  expect_grid_near(attention(Matrix{{1}}, Matrix{{1}}, Matrix{{3}}), {{3}});
  expect_grid_near(attention(Matrix{{0.3, 0.2}}, Matrix{{0.3, 0.2}}, Matrix{{5, 6}}), {{5, 6}});
  expect_grid_near(attention(Matrix{{0.7, -1}}, Matrix{{1, 1}, {1, 1}}, Matrix{{2, 0}, {4, 8}}), {{3, 4}});
  EXPECT_THROW(attention(Matrix(1, 2), Matrix(1, 3), Matrix(1, 1)), std::invalid_argument);
  EXPECT_THROW(attention(Matrix(1, 2), Matrix(2, 2), Matrix(3, 1)), std::invalid_argument);
}

TEST(Attention, MatchesOracleOnRandomShapes) {
  opt::Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.uniform_index(5), m = 1 + rng.uniform_index(5);
    const std::size_t d = 1 + rng.uniform_index(8), dv = 1 + rng.uniform_index(8);
    const auto q = random_matrix(n, d, rng), k = random_matrix(m, d, rng), v = random_matrix(m, dv, rng);
    expect_grid_near(attention(q, k, v), attention_oracle(to_grid(q), to_grid(k), to_grid(v)));
    const auto w = attention_weights(q, k);
    for (std::size_t r = 0; r < n; ++r) {
      double s = 0;
      for (std::size_t c = 0; c < m; ++c) s += w(r, c);
      EXPECT_NEAR(s, 1.0, 1e-9);
    }
  }
}

TEST(Attention, KeyValuePermutationInvariant) {
  opt::Rng rng(3);
  const auto q = random_matrix(3, 4, rng), k = random_matrix(5, 4, rng), v = random_matrix(5, 2, rng);
  Matrix kp(5, 4), vp(5, 2);
  const std::size_t perm[] = {3, 0, 4, 1, 2};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t c = 0; c < 4; ++c) kp(i, c) = k(perm[i], c);
    for (std::size_t c = 0; c < 2; ++c) vp(i, c) = v(perm[i], c);
  }
  expect_grid_near(attention(q, kp, vp), to_grid(attention(q, k, v)));
}

TEST(MultiHead, SingleHeadIdentityCollapses) {
  opt::Rng rng(4);
  const auto x = random_matrix(3, 4, rng);
  expect_grid_near(multi_head_attention(x, AttentionWeights::identity(4, 1)), to_grid(attention(x, x, x)));
}

TEST(MultiHead, ZeroOutput) {
  opt::Rng rng(5);
  const auto x = random_matrix(3, 4, rng);
  auto w = AttentionWeights::identity(4, 2);
  w.output = Matrix(4, 4);
  expect_grid_near(multi_head_attention(x, w), Grid(3, std::vector<double>(4, 0.0)));
}

TEST(MultiHead, MatchesPerHeadOracle) {
  opt::Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const std::size_t p = 1 + rng.uniform_index(3);
    const std::size_t d = p * (1 + rng.uniform_index(3));
    const std::size_t n = 1 + rng.uniform_index(5);
    AttentionWeights w;
    for (std::size_t h = 0; h < p; ++h) {
      w.query.push_back(random_matrix(d, d / p, rng));
      w.key.push_back(random_matrix(d, d / p, rng));
      w.value.push_back(random_matrix(d, d / p, rng));
    }
    w.output = random_matrix(d, d, rng);
    const auto x = random_matrix(n, d, rng);
    const Grid xg = to_grid(x);
    Grid concat(n);
    for (std::size_t h = 0; h < p; ++h) {
      const auto head = attention_oracle(mm(xg, to_grid(w.query[h])), mm(xg, to_grid(w.key[h])),
                                         mm(xg, to_grid(w.value[h])));
      for (std::size_t r = 0; r < n; ++r) concat[r].insert(concat[r].end(), head[r].begin(), head[r].end());
    }
    expect_grid_near(multi_head_attention(x, w), mm(concat, to_grid(w.output)));
  }
}

TEST(MultiHead, RejectsIndivisibleHeads) {
  AttentionWeights w = AttentionWeights::identity(4, 2);
  w.output = Matrix::identity(5);
  EXPECT_THROW(w.validate(), std::invalid_argument);
  EXPECT_THROW(AttentionWeights::identity(5, 2), std::invalid_argument);
  EXPECT_THROW(multi_head_attention(Matrix(2, 3), AttentionWeights::identity(4, 2)), std::invalid_argument);
}

TEST(Activations, Gelu) {
  EXPECT_EQ(gelu(0.0), 0.0);
  EXPECT_NEAR(gelu(10.0), 10.0, 1e-6);
  EXPECT_NEAR(gelu(1.0), 0.8413447460685429, 1e-7);
  for (double a = -10; a <= 10; a += 0.125) EXPECT_NEAR(gelu(a) - gelu(-a), a, 1e-12);
}

TEST(Activations, Relu) {
  EXPECT_EQ(relu(-1.0), 0.0);
  EXPECT_EQ(relu(2.0), 2.0);
  EXPECT_DOUBLE_EQ(leaky_relu(-1.0, 0.01), -0.01);
  EXPECT_DOUBLE_EQ(leaky_relu(-1.0, 0.1), -0.1);
  EXPECT_EQ(leaky_relu(3.0), 3.0);
  for (double a = -10; a <= 10; a += 0.125) EXPECT_EQ(relu(a) - relu(-a), a);
  EXPECT_THROW(leaky_relu(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(leaky_relu(1.0, 1.0), std::invalid_argument);
}

TEST(Gru, ZeroWeights) {
  const auto w = GruWeights::zeros(2, 3);
  const std::vector<double> h{1, -2, 4};
  const auto t = gru_trace(std::vector{0.0, 0.0}, h, w);
  expect_vec_near(t.reset, {0.5, 0.5, 0.5});
  expect_vec_near(t.update, {0.5, 0.5, 0.5});
  expect_vec_near(t.candidate, {0, 0, 0});
  expect_vec_near(t.h, {0.5, -1, 2});
}

TEST(Gru, UpdateGateEndpoints) {
  auto w = GruWeights::zeros(1, 2);
  w.g_candidate = Matrix{{2}, {-1}};
  const std::vector<double> x{0.5}, h{0.3, -0.7};
  w.b_update = {-60, -60};
  expect_vec_near(gru_step(x, h, w), h, 1e-20);
  w.b_update = {60, 60};
  const auto t = gru_trace(x, h, w);
  expect_vec_near(t.h, t.candidate, 1e-20);
  expect_vec_near(t.candidate, {std::tanh(1.0), std::tanh(-0.5)});
}

TEST(Gru, MatchesOracleAndConvexity) {
  opt::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t in = 1 + rng.uniform_index(8), hid = 1 + rng.uniform_index(5);
    GruWeights w;
    w.g_reset = random_matrix(hid, in, rng);
    w.w_reset = random_matrix(hid, hid, rng);
    w.g_update = random_matrix(hid, in, rng);
    w.w_update = random_matrix(hid, hid, rng);
    w.g_candidate = random_matrix(hid, in, rng);
    w.w_candidate = random_matrix(hid, hid, rng);
    w.b_reset = random_vec(hid, rng);
    w.b_update = random_vec(hid, rng);
    w.b_candidate = random_vec(hid, rng);
    const auto x = random_vec(in, rng), h = random_vec(hid, rng);

    const auto gx_r = mv(w.g_reset, x), wh_r = mv(w.w_reset, h);
    const auto gx_z = mv(w.g_update, x), wh_z = mv(w.w_update, h);
    std::vector<double> r(hid), z(hid), rh(hid);
    for (std::size_t i = 0; i < hid; ++i) {
      r[i] = sig(gx_r[i] + wh_r[i] + w.b_reset[i]);
      z[i] = sig(gx_z[i] + wh_z[i] + w.b_update[i]);
      rh[i] = r[i] * h[i];
    }
    const auto gx_h = mv(w.g_candidate, x), w_rh = mv(w.w_candidate, rh);
    std::vector<double> cand(hid), want(hid);
    for (std::size_t i = 0; i < hid; ++i) {
      cand[i] = std::tanh(gx_h[i] + w_rh[i] + w.b_candidate[i]);
      want[i] = (1 - z[i]) * h[i] + z[i] * cand[i];
    }
    const auto t = gru_trace(x, h, w);
    expect_vec_near(t.h, want);
    for (std::size_t i = 0; i < hid; ++i) {
      EXPECT_GT(t.reset[i], 0.0);
      EXPECT_LT(t.reset[i], 1.0);
      EXPECT_GT(t.update[i], 0.0);
      EXPECT_LT(t.update[i], 1.0);
      EXPECT_GE(t.h[i], std::min(h[i], t.candidate[i]) - 1e-15);
      EXPECT_LE(t.h[i], std::max(h[i], t.candidate[i]) + 1e-15);
    }
  }
}

TEST(Gru, ShapeMismatch) {
  EXPECT_THROW(gru_step(std::vector{1.0}, std::vector{0.0, 0.0}, GruWeights::zeros(2, 2)), std::invalid_argument);
}

namespace {

LstmWeights random_lstm(std::size_t in, std::size_t hid, LstmCandidate cand, opt::Rng& rng) {
  LstmWeights w = LstmWeights::zeros(in, hid, cand);
  for (Matrix* m : {&w.x_forget, &w.x_input, &w.x_output, &w.x_cell, &w.x_reset}) *m = random_matrix(hid, in, rng);
  for (Matrix* m : {&w.h_forget, &w.h_input, &w.h_output, &w.h_cell, &w.h_reset, &w.g_forget, &w.g_input,
                    &w.g_output})
    *m = random_matrix(hid, hid, rng);
  for (auto* b : {&w.b_forget, &w.b_input, &w.b_output, &w.b_cell, &w.b_reset}) *b = random_vec(hid, rng);
  return w;
}

LstmState lstm_oracle(const std::vector<double>& x, const LstmState& prev, const LstmWeights& w) {
  const std::size_t n = prev.h.size();
  auto pre = [&](const Matrix& wx, const Matrix& wh, const std::vector<double>& h, const std::vector<double>& b) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b[i];
      for (std::size_t c = 0; c < x.size(); ++c) s += wx(i, c) * x[c];
      for (std::size_t c = 0; c < n; ++c) s += wh(i, c) * h[c];
      out[i] = s;
    }
    return out;
  };
  auto gate = [&](const Matrix& wx, const Matrix& wh, const Matrix& wg, const std::vector<double>& b) {
    auto g = pre(wx, wh, prev.h, b);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < n; ++c) g[i] += wg(i, c) * prev.s[c];
      g[i] = sig(g[i]);
    }
    return g;
  };
  const auto f = gate(w.x_forget, w.h_forget, w.g_forget, w.b_forget);
  const auto i = gate(w.x_input, w.h_input, w.g_input, w.b_input);
  const auto o = gate(w.x_output, w.h_output, w.g_output, w.b_output);
  std::vector<double> h_in = prev.h;
  if (w.candidate == LstmCandidate::GruCoupled) {
    auto r = pre(w.x_reset, w.h_reset, prev.h, w.b_reset);
    for (std::size_t k = 0; k < n; ++k) h_in[k] = sig(r[k]) * prev.h[k];
  }
  auto cand = pre(w.x_cell, w.h_cell, h_in, w.b_cell);
  LstmState out{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.s[k] = f[k] * prev.s[k] + i[k] * std::tanh(cand[k]);
    out.h[k] = o[k] * std::tanh(out.s[k]);
  }
  return out;
}

}  // namespace

TEST(Lstm, ZeroWeights) {
  const auto w = LstmWeights::zeros(2, 2);
  const LstmState prev{{0.3, -0.1}, {1.0, -2.0}};
  const auto t = lstm_trace(std::vector{0.0, 0.0}, prev, w);
  expect_vec_near(t.forget, {0.5, 0.5});
  expect_vec_near(t.input, {0.5, 0.5});
  expect_vec_near(t.output, {0.5, 0.5});
  expect_vec_near(t.candidate, {0, 0});
  expect_vec_near(t.state.s, {0.5, -1.0});
  expect_vec_near(t.state.h, {0.5 * std::tanh(0.5), 0.5 * std::tanh(-1.0)});
}

TEST(Lstm, PerfectMemoryAndClosedOutput) {
  auto w = LstmWeights::zeros(1, 2);
  w.b_forget = {60, 60};
  w.b_input = {-60, -60};
  w.b_output = {-800, -800};
  w.x_cell = Matrix{{1}, {1}};
  const LstmState prev{{0.2, 0.4}, {0.7, -0.3}};
  const auto next = lstm_step(std::vector{2.0}, prev, w);
  expect_vec_near(next.s, prev.s, 1e-20);
  expect_vec_near(next.h, {0, 0}, 1e-300);
}

TEST(Lstm, MatchesOracleBothVariants) {
  opt::Rng rng(8);
  for (auto cand : {LstmCandidate::Standard, LstmCandidate::GruCoupled}) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t in = 1 + rng.uniform_index(8), hid = 1 + rng.uniform_index(5);
      const auto w = random_lstm(in, hid, cand, rng);
      const LstmState prev{random_vec(hid, rng), random_vec(hid, rng, 2.0)};
      const auto x = random_vec(in, rng);
      const auto t = lstm_trace(x, prev, w);
      const auto want = lstm_oracle(x, prev, w);
      expect_vec_near(t.state.h, want.h);
      expect_vec_near(t.state.s, want.s);
      for (const auto* g : {&t.forget, &t.input, &t.output}) {
        for (double v : *g) {
          EXPECT_GT(v, 0.0);
          EXPECT_LT(v, 1.0);
        }
      }
    }
  }
}

TEST(Lstm, CoupledVariantDiffers) {
  opt::Rng rng(9);
  auto w = random_lstm(3, 3, LstmCandidate::GruCoupled, rng);
  const LstmState prev{{0.5, -0.5, 0.9}, {0.1, 0.2, 0.3}};
  const std::vector<double> x{0.1, 0.2, 0.3};
  const auto coupled = lstm_step(x, prev, w);
  w.candidate = LstmCandidate::Standard;
  EXPECT_NE(coupled.h, lstm_step(x, prev, w).h);
}

TEST(BiLstm, StepConcatenatesForwardThenBackward) {
  opt::Rng rng(10);
  BiLstmWeights w{random_lstm(2, 3, LstmCandidate::Standard, rng), random_lstm(2, 2, LstmCandidate::Standard, rng)};
  const LstmState f{random_vec(3, rng), random_vec(3, rng)}, b{random_vec(2, rng), random_vec(2, rng)};
  const std::vector<double> xf{0.1, 0.2}, xb{-0.3, 0.4};
  const auto out = bilstm_step(xf, xb, f, b, w);
  auto want = lstm_oracle(xf, f, w.forward).h;
  const auto hb = lstm_oracle(xb, b, w.backward).h;
  want.insert(want.end(), hb.begin(), hb.end());
  expect_vec_near(out.h_concat, want);
}

TEST(BiLstm, SequenceMatchesOracle) {
  opt::Rng rng(11);
  BiLstmWeights w{random_lstm(2, 3, LstmCandidate::Standard, rng), random_lstm(2, 3, LstmCandidate::Standard, rng)};
  std::vector<std::vector<double>> xs(4);
  for (auto& x : xs) x = random_vec(2, rng);
  const auto out = bilstm_sequence(xs, w);
  LstmState f{{0, 0, 0}, {0, 0, 0}}, b = f;
  std::vector<std::vector<double>> fwd(4), bwd(4);
  for (int t = 0; t < 4; ++t) fwd[t] = (f = lstm_oracle(xs[t], f, w.forward)).h;
  for (int t = 3; t >= 0; --t) bwd[t] = (b = lstm_oracle(xs[t], b, w.backward)).h;
  for (int t = 0; t < 4; ++t) {
    auto want = fwd[t];
    want.insert(want.end(), bwd[t].begin(), bwd[t].end());
    expect_vec_near(out[t], want);
  }
}

namespace {

Grid gnn_oracle(const Grid& adj, const Grid& d, const GnnWeights& w) {
  const std::size_t n = adj.size(), e = d[0].size(), out = w.weight.cols();
  Grid g(n, std::vector<double>(e, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < e; ++c) g[i][c] += adj[i][j] * d[j][c];
  Grid res(n, std::vector<double>(out, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < out; ++c) {
      double s = w.bias[c];
      for (std::size_t k = 0; k < e; ++k) s += g[i][k] * w.weight(k, c);
      res[i][c] = s >= 0 ? s : w.slope * s;
    }
  return res;
}

}  // namespace

TEST(Gnn, IdentityAdjacencyIsPerNodeAffine) {
  const Matrix d{{1, -2}, {0.5, 3}};
  const GnnWeights w{Matrix{{1, 0}, {0, 1}}, {0, 0}, 0.01};
  expect_grid_near(gnn_block(Matrix::identity(2), d, w), {{1, -0.02}, {0.5, 3}});
}

TEST(Gnn, ZeroFeaturesGiveActivatedBias) {
  const GnnWeights w{Matrix(2, 3), {1, -1, 0}, 0.1};
  expect_grid_near(gnn_block(add_self_loops(Matrix{{0, 1}, {1, 0}}), Matrix(2, 2), w), {{1, -0.1, 0}, {1, -0.1, 0}});
}

TEST(Gnn, PathGraphHandExample) {
  const Matrix adj = add_self_loops(Matrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  const Matrix d{{1}, {2}, {-4}};
  const GnnWeights w{Matrix{{1}}, {0}, 0.01};
  // Aggregates: 1+2, 1+2-4, 2-4.
  expect_grid_near(gnn_block(adj, d, w), {{3}, {-0.01}, {-0.02}});
}

TEST(Gnn, BlocksMatchOracle) {
  opt::Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.uniform_index(5), e = 1 + rng.uniform_index(8);
    Matrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) adj(i, j) = adj(j, i) = rng.uniform() < 0.5 ? 1.0 : 0.0;
    adj = add_self_loops(adj);
    const auto d0 = random_matrix(n, e, rng);
    const std::size_t e1 = 1 + rng.uniform_index(8), e2 = 1 + rng.uniform_index(8);
    const std::vector<GnnWeights> blocks{{random_matrix(e, e1, rng), random_vec(e1, rng), 0.05},
                                         {random_matrix(e1, e2, rng), random_vec(e2, rng), 0.01}};
    const auto g1 = gnn_oracle(to_grid(adj), to_grid(d0), blocks[0]);
    const auto g2 = gnn_oracle(to_grid(adj), g1, blocks[1]);
    expect_grid_near(gnn_block(adj, d0, blocks[0]), g1);
    std::vector<double> mean(e2, 0.0), sum(e2, 0.0);
    for (const auto& row : g2)
      for (std::size_t c = 0; c < e2; ++c) sum[c] += row[c];
    for (std::size_t c = 0; c < e2; ++c) mean[c] = sum[c] / static_cast<double>(n);
    expect_vec_near(gnn_forward(adj, d0, blocks), mean);
    expect_vec_near(gnn_forward(adj, d0, blocks, Readout::Sum), sum);
  }
}

TEST(Gnn, ReadoutEdgeCases) {
  const Matrix d{{1, 2}, {3, 4}};
  expect_vec_near(gnn_forward(Matrix::identity(2), d, {}), {2, 3});
  expect_vec_near(readout(Matrix{{5, 6}, {5, 6}, {5, 6}}, Readout::Mean), {5, 6});
  EXPECT_THROW(gnn_block(Matrix(2, 3), d, {Matrix(2, 2), {0, 0}}), std::invalid_argument);
  EXPECT_THROW(gnn_block(Matrix::identity(2), d, {Matrix(3, 2), {0, 0}}), std::invalid_argument);
}

TEST(Encoder, ZeroWeightsPassThrough) {
  opt::Rng rng(13);
  const auto x = random_matrix(5, 8, rng);
  const auto out = encoder_layer(x, AttentionWeights::zeros(8, 2), FeedForward::zeros(8, 16));
  EXPECT_EQ(out.rows(), 5u);
  EXPECT_EQ(out.cols(), 8u);
  expect_grid_near(out, to_grid(x));
}

TEST(Encoder, IdentityAttentionZeroFfn) {
  opt::Rng rng(14);
  const auto x = random_matrix(4, 6, rng);
  const auto att = attention_oracle(to_grid(x), to_grid(x), to_grid(x));
  Grid want = to_grid(x);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 6; ++c) want[r][c] += att[r][c];
  expect_grid_near(encoder_layer(x, AttentionWeights::identity(6, 1), FeedForward::zeros(6, 4)), want);
}

TEST(Encoder, FeedForwardMatchesOracle) {
  opt::Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.uniform_index(5), d = 1 + rng.uniform_index(8), hid = 1 + rng.uniform_index(8);
    const FeedForward f{random_matrix(d, hid, rng), random_vec(hid, rng), random_matrix(hid, d, rng),
                        random_vec(d, rng)};
    const auto x = random_matrix(n, d, rng);
    Grid want(n, std::vector<double>(d));
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<double> h(hid);
      for (std::size_t k = 0; k < hid; ++k) {
        double s = f.b1[k];
        for (std::size_t c = 0; c < d; ++c) s += x(r, c) * f.w1(c, k);
        h[k] = 0.5 * s * (1 + std::erf(s / std::sqrt(2.0)));
      }
      for (std::size_t c = 0; c < d; ++c) {
        double s = f.b2[c];
        for (std::size_t k = 0; k < hid; ++k) s += h[k] * f.w2(k, c);
        want[r][c] = s;
      }
    }
    expect_grid_near(feed_forward(x, f), want);
  }
}

TEST(Gumbel, ContractAndErrors) {
  opt::Rng rng(16);
  for (int i = 0; i < 1000; ++i) {
    const auto s = gumbel_softmax_st(std::vector{0.3, -1.0, 2.0, 0.0}, 0.7, rng);
    EXPECT_NEAR(std::accumulate(s.soft.begin(), s.soft.end(), 0.0), 1.0, 1e-12);
    int ones = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_GE(s.soft[k], 0.0);
      if (s.hard[k] == 1.0) ++ones;
      else EXPECT_EQ(s.hard[k], 0.0);
    }
    EXPECT_EQ(ones, 1);
    const auto argmax = std::max_element(s.soft.begin(), s.soft.end()) - s.soft.begin();
    EXPECT_EQ(s.hard[static_cast<std::size_t>(argmax)], 1.0);
  }
  EXPECT_THROW(gumbel_softmax_st(std::vector{1.0}, 0.0, rng), std::invalid_argument);
  EXPECT_THROW(gumbel_softmax_st(std::vector{1.0}, -1.0, rng), std::invalid_argument);
  EXPECT_THROW(gumbel_softmax_st(std::vector<double>{}, 1.0, rng), std::invalid_argument);
}

TEST(Gumbel, HighTemperatureNearUniform) {
  opt::Rng rng(17);
  std::vector<double> mean(3, 0.0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const auto s = gumbel_softmax_st(std::vector{0.0, 0.0, 0.0}, 100.0, rng);
    for (int k = 0; k < 3; ++k) mean[k] += s.soft[k] / n;
  }
  for (double m : mean) EXPECT_NEAR(m, 1.0 / 3.0, 0.05);
}

TEST(Gumbel, LargeGapAlmostAlwaysWins) {
  opt::Rng rng(18);
  int wins = 0;
  for (int i = 0; i < 10000; ++i) wins += gumbel_softmax_st(std::vector{10.0, -10.0}, 0.1, rng).hard[0] == 1.0;
  EXPECT_GE(wins, 9999);
}

TEST(Gumbel, NoiseFollowsFormula) {
  opt::Rng a(19), b(19);
  const std::vector<double> logits{0.5, -0.25, 1.0};
  const auto s = gumbel_softmax_st(logits, 0.5, a);
  std::vector<double> z(3);
  for (int k = 0; k < 3; ++k) z[k] = (logits[k] - std::log(-std::log(b.uniform_open()))) / 0.5;
  const double mx = *std::max_element(z.begin(), z.end());
  double tot = 0;
  for (auto& v : z) tot += (v = std::exp(v - mx));
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(s.soft[k], z[k] / tot, 1e-12);
}
