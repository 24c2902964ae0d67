#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opt/nn/matrix.hpp"

namespace opt::nn {

using Vec = std::vector<double>;

/// Input maps G_* are hidden × input, recurrent maps W_* are hidden × hidden.
struct GruWeights {
  Matrix g_reset, w_reset;
  Matrix g_update, w_update;
  Matrix g_candidate, w_candidate;
  Vec b_reset, b_update, b_candidate;

  std::size_t input_dim() const { return g_reset.cols(); }
  std::size_t hidden_dim() const { return g_reset.rows(); }
  void validate() const;

  static GruWeights zeros(std::size_t input, std::size_t hidden);
};

struct GruTrace {
  Vec reset;
  Vec update;
  Vec candidate;
  Vec h;
};

GruTrace gru_trace(std::span<const double> x, std::span<const double> h_prev, const GruWeights& w);
Vec gru_step(std::span<const double> x, std::span<const double> h_prev, const GruWeights& w);

enum class LstmCandidate {
  Standard,
  /// tanh(WE_xm·x + WE_xh·(r ⊙ h_prev) + de_g) with a GRU-style reset gate r.
  GruCoupled,
};

/// Peephole LSTM. x_* are hidden × input; h_* and g_* (peephole on the cell
/// state) are hidden × hidden.
struct LstmWeights {
  Matrix x_forget, h_forget, g_forget;
  Matrix x_input, h_input, g_input;
  Matrix x_output, h_output, g_output;
  Matrix x_cell, h_cell;
  Vec b_forget, b_input, b_output, b_cell;

  LstmCandidate candidate = LstmCandidate::Standard;
  Matrix x_reset, h_reset;
  Vec b_reset;

  std::size_t input_dim() const { return x_forget.cols(); }
  std::size_t hidden_dim() const { return x_forget.rows(); }
  void validate() const;

  static LstmWeights zeros(std::size_t input, std::size_t hidden,
                           LstmCandidate candidate = LstmCandidate::Standard);
};

struct LstmState {
  Vec h;
  Vec s;
};

struct LstmTrace {
  Vec forget, input, output, reset;
  Vec candidate;
  LstmState state;
};

LstmTrace lstm_trace(std::span<const double> x, const LstmState& prev, const LstmWeights& w);
LstmState lstm_step(std::span<const double> x, const LstmState& prev, const LstmWeights& w);

struct BiLstmWeights {
  LstmWeights forward;
  LstmWeights backward;
};

struct BiLstmStep {
  LstmState forward;
  LstmState backward;
  Vec h_concat;
};

/// One step in each direction. x_fwd and x_bwd are the inputs each direction
/// sees at this step.
BiLstmStep bilstm_step(std::span<const double> x_fwd, std::span<const double> x_bwd,
                       const LstmState& fwd_prev, const LstmState& bwd_prev, const BiLstmWeights& w);

/// Runs the forward LSTM over xs and the backward LSTM over reversed xs from
/// zero states. Output t is (h_fwd[t], h_bwd[t]) where h_bwd[t] is the
/// backward state after consuming xs[T-1..t].
std::vector<Vec> bilstm_sequence(const std::vector<Vec>& xs, const BiLstmWeights& w);

}  // namespace opt::nn
