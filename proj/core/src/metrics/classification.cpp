#include <map>
#include <stdexcept>

#include "opt/metrics/metrics.hpp"

namespace opt::metrics {

namespace {
void check(std::span<const std::string> pred, std::span<const std::string> gold, const char* what) {
  if (pred.size() != gold.size()) throw std::invalid_argument(std::string(what) + ": length mismatch");
  if (pred.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
}
}  // namespace

double accuracy(std::span<const std::string> pred, std::span<const std::string> gold) {
  check(pred, gold, "accuracy");
  std::size_t hit = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) hit += pred[i] == gold[i];
  return static_cast<double>(hit) / static_cast<double>(pred.size());
}

double macro_f1(std::span<const std::string> pred, std::span<const std::string> gold) {
  check(pred, gold, "macro_f1");
  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;
  };
  std::map<std::string, Counts> per_class;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] == gold[i]) {
      ++per_class[pred[i]].tp;
    } else {
      ++per_class[pred[i]].fp;
      ++per_class[gold[i]].fn;
    }
  }
  double sum = 0.0;
  for (const auto& [label, c] : per_class) {
    const auto denom = static_cast<double>(2 * c.tp + c.fp + c.fn);
    sum += denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(c.tp) / denom;
  }
  return sum / static_cast<double>(per_class.size());
}

}  // namespace opt::metrics
