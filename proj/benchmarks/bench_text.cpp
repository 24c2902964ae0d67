#include <benchmark/benchmark.h>

#include "opt/core/rng.hpp"
#include "opt/metrics/metrics.hpp"
#include "opt/text/clean.hpp"
#include "opt/text/porter.hpp"
#include "opt/text/vectorize.hpp"

namespace {

const std::vector<std::string>& lexicon() {
  static const std::vector<std::string> words{"running", "films", "wasn't", "relational", "happiness", "the",
                                              "Great!", "plot", "acting", "don't", "conditional", "generalizations",
                                              "boring", "and", "characters", "it's", "hopeful", "ending"};
  return words;
}

std::vector<std::string> documents(std::size_t n, std::size_t len) {
  opt::Rng rng(7);
  std::vector<std::string> docs(n);
  for (auto& d : docs)
    for (std::size_t k = 0; k < len; ++k) d += lexicon()[rng.uniform_index(lexicon().size())] + " ";
  return docs;
}

void BM_Preprocess(benchmark::State& state) {
  const auto docs = documents(100, 40);
  opt::text::PipelineOptions opts;
  opts.stem = true;
  for (auto _ : state)
    for (const auto& d : docs) benchmark::DoNotOptimize(opt::text::preprocess(d, opts));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_Preprocess);

void BM_PorterStem(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& w : lexicon()) benchmark::DoNotOptimize(opt::text::stem(w));
}
BENCHMARK(BM_PorterStem);

void BM_TfIdf(benchmark::State& state) {
  opt::text::Corpus corpus;
  for (const auto& d : documents(static_cast<std::size_t>(state.range(0)), 40))
    corpus.push_back(opt::text::preprocess(d));
  const auto vocab = opt::text::build_vocabulary(corpus);
  for (auto _ : state) benchmark::DoNotOptimize(opt::text::tf_idf(corpus, vocab));
}
BENCHMARK(BM_TfIdf)->Arg(100)->Arg(1000);

void BM_Bleu4(benchmark::State& state) {
  const auto cand = opt::text::tokenize(documents(1, 30)[0]);
  const auto ref = opt::text::tokenize(documents(2, 30)[1]);
  for (auto _ : state) benchmark::DoNotOptimize(opt::metrics::bleu4(cand, ref));
}
BENCHMARK(BM_Bleu4);

}  // namespace

BENCHMARK_MAIN();
