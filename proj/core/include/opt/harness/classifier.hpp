#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "opt/core/objective.hpp"
#include "opt/harness/corpus.hpp"
#include "opt/harness/hyperparams.hpp"
#include "opt/text/vectorize.hpp"

namespace opt::harness {

struct ClassifierParams {
  std::size_t min_doc_freq = 1;
  /// Unset keeps every term; 0 means an empty vocabulary.
  std::optional<std::size_t> max_terms;
  bool use_stemming = false;
  double smoothing = 1.0;
};

struct ClassifierScore {
  double accuracy = 0.0;
  double macro_f = 0.0;
  std::size_t vocabulary_size = 0;
};

/// min_doc_freq integer [1, 5], max_terms integer [0, 500], use_stemming
/// categorical {false, true}, smoothing continuous [0.01, 2].
HyperparamSpace default_classifier_space();

/// Reads the four parameters from decoded values. Dimensions missing from the
/// space keep their ClassifierParams defaults; use_stemming accepts
/// "true"/"false" or an integer.
ClassifierParams params_from(const HyperparamSpace& space, std::span<const ParamValue> values);

/// Tokenized train/test splits, stemmed and unstemmed, computed once.
class ClassifierTask {
public:
  explicit ClassifierTask(const LabeledCorpus& corpus);

  /// Builds the vocabulary on the train split, fits TF-IDF and naive Bayes on
  /// it and scores the test split. An empty vocabulary scores zero.
  ClassifierScore evaluate(const ClassifierParams& p) const;

private:
  std::vector<text::TokenList> train_[2];
  std::vector<text::TokenList> test_[2];
  std::vector<std::string> train_labels_;
  std::vector<std::string> test_labels_;
};

/// Fitness 1 - macro-F on the test split; 1.0 for empty-vocabulary regions.
Objective classifier_objective(const LabeledCorpus& corpus, const HyperparamSpace& space);
Objective classifier_objective(std::shared_ptr<const ClassifierTask> task, const HyperparamSpace& space);

}  // namespace opt::harness
