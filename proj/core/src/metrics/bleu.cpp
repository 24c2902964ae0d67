#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "opt/metrics/metrics.hpp"

namespace opt::metrics {

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngrams(std::span<const std::string> toks, std::size_t n) {
  NgramCounts counts;
  if (toks.size() < n) return counts;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    ++counts[std::vector<std::string>(toks.begin() + static_cast<std::ptrdiff_t>(i),
                                      toks.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

}  // namespace

double bleu4(std::span<const std::string> candidate, std::span<const Tokens> references) {
  if (references.empty()) throw std::invalid_argument("bleu4: no references");
  if (std::all_of(references.begin(), references.end(), [](const Tokens& r) { return r.empty(); })) {
    throw std::invalid_argument("bleu4: empty reference");
  }
  if (candidate.empty()) return 0.0;

  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const NgramCounts cand = ngrams(candidate, n);
    NgramCounts max_ref;
    for (const auto& ref : references) {
      for (const auto& [g, c] : ngrams(ref, n)) {
        auto& slot = max_ref[g];
        slot = std::max(slot, c);
      }
    }
    double matched = 0.0, total = 0.0;
    for (const auto& [g, c] : cand) {
      total += static_cast<double>(c);
      if (auto it = max_ref.find(g); it != max_ref.end()) matched += static_cast<double>(std::min(c, it->second));
    }
    if (matched == 0.0) {
      matched += kBleuSmoothing;
      total += kBleuSmoothing;
    }
    log_sum += 0.25 * std::log(matched / total);
  }

  const auto c = static_cast<double>(candidate.size());
  double r = static_cast<double>(references.front().size());
  for (const auto& ref : references) {
    const auto len = static_cast<double>(ref.size());
    if (std::abs(len - c) < std::abs(r - c) || (std::abs(len - c) == std::abs(r - c) && len < r)) r = len;
  }
  const double bp = c >= r ? 1.0 : std::exp(1.0 - r / c);
  return bp * std::exp(log_sum);
}

double bleu4(std::span<const std::string> candidate, std::span<const std::string> reference) {
  const Tokens refs[] = {Tokens(reference.begin(), reference.end())};
  return bleu4(candidate, std::span<const Tokens>(refs));
}

}  // namespace opt::metrics
