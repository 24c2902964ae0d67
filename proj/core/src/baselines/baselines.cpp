#include "opt/baselines/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace opt::baselines {

std::string_view to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::RFO: return "RFO";
    case BaselineKind::AHA: return "AHA";
    case BaselineKind::PSO: return "PSO";
  }
  return "?";
}

std::optional<BaselineKind> parse_baseline(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "rfo") return BaselineKind::RFO;
  if (lower == "aha") return BaselineKind::AHA;
  if (lower == "pso") return BaselineKind::PSO;
  return std::nullopt;
}

OptimizationResult run_baseline(BaselineKind kind, const Objective& obj, const SearchSpace& space,
                                std::size_t pop_size, std::size_t max_iters, Rng& rng) {
  switch (kind) {
    case BaselineKind::RFO: return run_rfo(obj, space, pop_size, max_iters, rng);
    case BaselineKind::AHA: return run_aha(obj, space, pop_size, max_iters, rng);
    case BaselineKind::PSO: return run_pso(obj, space, pop_size, max_iters, rng);
  }
  return {};
}

}  // namespace opt::baselines
