#include "opt/harness/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opt::harness {

void MultinomialNB::fit(const text::TermDocMatrix& x, const std::vector<std::string>& labels, double smoothing) {
  if (!(smoothing > 0.0)) throw std::invalid_argument("naive bayes: smoothing must be > 0");
  if (x.rows != labels.size()) throw std::invalid_argument("naive bayes: rows != labels");
  if (x.rows == 0) throw std::invalid_argument("naive bayes: no documents");

  classes_ = labels;
  std::sort(classes_.begin(), classes_.end());
  classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
  features_ = x.cols;

  const std::size_t k = classes_.size();
  std::vector<double> doc_count(k, 0.0);
  std::vector<double> weight(k * features_, 0.0);
  for (std::size_t d = 0; d < x.rows; ++d) {
    const auto c = static_cast<std::size_t>(std::lower_bound(classes_.begin(), classes_.end(), labels[d]) -
                                            classes_.begin());
    doc_count[c] += 1.0;
    for (std::size_t j = 0; j < features_; ++j) weight[c * features_ + j] += x(d, j);
  }

  log_prior_.resize(k);
  log_likelihood_.assign(k * features_, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    log_prior_[c] = std::log(doc_count[c] / static_cast<double>(x.rows));
    double total = 0.0;
    for (std::size_t j = 0; j < features_; ++j) total += weight[c * features_ + j];
    const double denom = total + smoothing * static_cast<double>(features_);
    for (std::size_t j = 0; j < features_; ++j) {
      log_likelihood_[c * features_ + j] = std::log((weight[c * features_ + j] + smoothing) / denom);
    }
  }
}

std::vector<std::string> MultinomialNB::predict(const text::TermDocMatrix& x) const {
  if (classes_.empty()) throw std::logic_error("naive bayes: predict before fit");
  if (x.cols != features_) throw std::invalid_argument("naive bayes: feature count mismatch");
  std::vector<std::string> out;
  out.reserve(x.rows);
  for (std::size_t d = 0; d < x.rows; ++d) {
    std::size_t best = 0;
    double best_score = -INFINITY;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      double s = log_prior_[c];
      for (std::size_t j = 0; j < features_; ++j) {
        const double v = x(d, j);
        if (v != 0.0) s += v * log_likelihood_[c * features_ + j];
      }
      if (s > best_score) {
        best_score = s;
        best = c;
      }
    }
    out.push_back(classes_[best]);
  }
  return out;
}

}  // namespace opt::harness
