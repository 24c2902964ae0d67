#include <benchmark/benchmark.h>

#include "opt/baselines/baselines.hpp"
#include "opt/baselines/benchmarks.hpp"
#include "opt/hraha/hraha.hpp"

namespace {

void BM_HrahaSphere(benchmark::State& state) {
  const auto fn = opt::baselines::benchmark_fn("sphere", static_cast<std::size_t>(state.range(0)));
  const auto obj = fn.objective();
  opt::hraha::HrahaConfig cfg;
  cfg.max_iters = 100;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    opt::Rng rng(seed++);
    benchmark::DoNotOptimize(opt::hraha::run(obj, fn.space(), cfg, 30, rng));
  }
}
BENCHMARK(BM_HrahaSphere)->Arg(2)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Baseline(benchmark::State& state) {
  const auto kind = static_cast<opt::baselines::BaselineKind>(state.range(0));
  const auto fn = opt::baselines::benchmark_fn("rastrigin", 10);
  const auto obj = fn.objective();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    opt::Rng rng(seed++);
    benchmark::DoNotOptimize(opt::baselines::run_baseline(kind, obj, fn.space(), 30, 100, rng));
  }
  state.SetLabel(std::string(opt::baselines::to_string(kind)));
}
BENCHMARK(BM_Baseline)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
