#include <benchmark/benchmark.h>

#include "opt/core/rng.hpp"
#include "opt/nn/attention.hpp"
#include "opt/nn/gumbel.hpp"
#include "opt/nn/recurrent.hpp"

namespace {

opt::nn::Matrix random_matrix(std::size_t r, std::size_t c, opt::Rng& rng) {
  opt::nn::Matrix m(r, c);
  for (auto& v : m.data()) v = rng.uniform(-1, 1);
  return m;
}

void BM_MultiHeadAttention(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t d = 64, p = 8;
  opt::Rng rng(1);
  opt::nn::AttentionWeights w;
  for (std::size_t h = 0; h < p; ++h) {
    w.query.push_back(random_matrix(d, d / p, rng));
    w.key.push_back(random_matrix(d, d / p, rng));
    w.value.push_back(random_matrix(d, d / p, rng));
  }
  w.output = random_matrix(d, d, rng);
  const auto x = random_matrix(n, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(opt::nn::multi_head_attention(x, w));
}
BENCHMARK(BM_MultiHeadAttention)->RangeMultiplier(4)->Range(16, 256);

void BM_BiLstmSequence(benchmark::State& state) {
  const std::size_t in = 32, hid = 64;
  opt::Rng rng(2);
  auto fill = [&](opt::nn::LstmWeights& w) {
    for (auto* m : {&w.x_forget, &w.x_input, &w.x_output, &w.x_cell}) *m = random_matrix(hid, in, rng);
    for (auto* m : {&w.h_forget, &w.h_input, &w.h_output, &w.h_cell, &w.g_forget, &w.g_input, &w.g_output})
      *m = random_matrix(hid, hid, rng);
  };
  opt::nn::BiLstmWeights w{opt::nn::LstmWeights::zeros(in, hid), opt::nn::LstmWeights::zeros(in, hid)};
  fill(w.forward);
  fill(w.backward);
  std::vector<std::vector<double>> xs(static_cast<std::size_t>(state.range(0)), std::vector<double>(in, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(opt::nn::bilstm_sequence(xs, w));
}
BENCHMARK(BM_BiLstmSequence)->Arg(16)->Arg(128);

void BM_GumbelSoftmax(benchmark::State& state) {
  opt::Rng rng(3);
  std::vector<double> logits(static_cast<std::size_t>(state.range(0)));
  for (auto& v : logits) v = rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(opt::nn::gumbel_softmax_st(logits, 0.5, rng));
}
BENCHMARK(BM_GumbelSoftmax)->Arg(8)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
