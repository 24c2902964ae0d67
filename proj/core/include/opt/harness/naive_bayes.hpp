#pragma once

#include <string>
#include <vector>

#include "opt/text/vectorize.hpp"

namespace opt::harness {

/// Multinomial naive Bayes over non-negative feature weights (counts or
/// TF-IDF). Classes are kept in sorted order; prediction ties go to the first.
class MultinomialNB {
public:
  /// Throws std::invalid_argument unless smoothing > 0, rows match labels and
  /// there is at least one document.
  void fit(const text::TermDocMatrix& x, const std::vector<std::string>& labels, double smoothing);

  std::vector<std::string> predict(const text::TermDocMatrix& x) const;

  const std::vector<std::string>& classes() const { return classes_; }
  /// log P(class) and log P(term | class), rows are classes.
  const std::vector<double>& log_prior() const { return log_prior_; }
  const std::vector<double>& log_likelihood() const { return log_likelihood_; }

private:
  std::vector<std::string> classes_;
  std::vector<double> log_prior_;
  std::vector<double> log_likelihood_;
  std::size_t features_ = 0;
};

}  // namespace opt::harness
