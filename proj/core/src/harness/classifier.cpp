#include "opt/harness/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "opt/harness/naive_bayes.hpp"
#include "opt/metrics/metrics.hpp"

namespace opt::harness {

HyperparamSpace default_classifier_space() {
  return HyperparamSpace({
      {"min_doc_freq", IntegerDim{1, 5}},
      {"max_terms", IntegerDim{0, 500}},
      {"use_stemming", CategoricalDim{{"false", "true"}}},
      {"smoothing", ContinuousDim{0.01, 2.0}},
  });
}

ClassifierParams params_from(const HyperparamSpace& space, std::span<const ParamValue> values) {
  if (values.size() != space.size()) throw std::invalid_argument("params_from: length mismatch");
  ClassifierParams p;
  for (std::size_t j = 0; j < space.size(); ++j) {
    const auto& name = space.dims()[j].name;
    const auto& v = values[j];
    auto as_int = [&]() -> std::int64_t {
      if (auto* i = std::get_if<std::int64_t>(&v)) return *i;
      throw std::invalid_argument("hyperparam " + name + " must be an integer dimension");
    };
    if (name == "min_doc_freq") {
      p.min_doc_freq = static_cast<std::size_t>(std::max<std::int64_t>(1, as_int()));
    } else if (name == "max_terms") {
      p.max_terms = static_cast<std::size_t>(std::max<std::int64_t>(0, as_int()));
    } else if (name == "use_stemming") {
      if (auto* s = std::get_if<std::string>(&v)) {
        p.use_stemming = *s == "true";
      } else {
        p.use_stemming = as_int() != 0;
      }
    } else if (name == "smoothing") {
      auto* d = std::get_if<double>(&v);
      if (!d) throw std::invalid_argument("hyperparam smoothing must be continuous");
      p.smoothing = *d;
    } else {
      throw std::invalid_argument("classifier: unknown hyperparameter " + name);
    }
  }
  return p;
}

ClassifierTask::ClassifierTask(const LabeledCorpus& corpus) {
  for (int stem = 0; stem < 2; ++stem) {
    text::PipelineOptions opts;
    opts.stem = stem == 1;
    for (auto i : corpus.train) train_[stem].push_back(text::preprocess(corpus.documents[i].text, opts));
    for (auto i : corpus.test) test_[stem].push_back(text::preprocess(corpus.documents[i].text, opts));
  }
  for (auto i : corpus.train) train_labels_.push_back(corpus.documents[i].label);
  for (auto i : corpus.test) test_labels_.push_back(corpus.documents[i].label);
}

ClassifierScore ClassifierTask::evaluate(const ClassifierParams& p) const {
  if (p.max_terms && *p.max_terms == 0) return {};
  const int s = p.use_stemming ? 1 : 0;
  const auto vocab = text::build_vocabulary(train_[s], p.min_doc_freq, p.max_terms);
  if (vocab.empty()) return {};
  const auto idf = text::fit_idf(train_[s], vocab);
  MultinomialNB nb;
  nb.fit(text::apply_idf(train_[s], vocab, idf), train_labels_, p.smoothing);
  if (test_labels_.empty()) return {0.0, 0.0, vocab.size()};
  const auto pred = nb.predict(text::apply_idf(test_[s], vocab, idf));
  return {metrics::accuracy(pred, test_labels_), metrics::macro_f1(pred, test_labels_), vocab.size()};
}

Objective classifier_objective(std::shared_ptr<const ClassifierTask> task, const HyperparamSpace& space) {
  Objective obj;
  obj.arity = space.size();
  obj.name = "naive_bayes_tfidf";
  obj.fn = [task = std::move(task), space](std::span<const double> x) {
    const auto score = task->evaluate(params_from(space, space.decode(x)));
    return score.vocabulary_size == 0 ? 1.0 : 1.0 - score.macro_f;
  };
  return obj;
}

Objective classifier_objective(const LabeledCorpus& corpus, const HyperparamSpace& space) {
  return classifier_objective(std::make_shared<const ClassifierTask>(corpus), space);
}

}  // namespace opt::harness
