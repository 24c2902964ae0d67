#include "opt/text/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "opt/text/clean.hpp"
#include "opt/text/porter.hpp"

namespace opt::text {

TokenList preprocess(std::string_view raw, const PipelineOptions& opts) {
  TokenList tokens = tokenize(clean_text(raw));
  if (opts.remove_stopwords) {
    tokens = remove_stopwords(tokens, opts.stoplist ? *opts.stoplist : Stoplist::english());
  }
  if (opts.stem) {
    for (auto& t : tokens) t = stem(t);
  }
  return tokens;
}

Vocabulary::Vocabulary(std::vector<std::string> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  if (std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end()) {
    throw std::invalid_argument("vocabulary: duplicate term");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::optional<std::size_t> Vocabulary::index_of(const std::string& term) const {
  auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(const Corpus& corpus, std::size_t min_doc_freq, std::optional<std::size_t> max_terms) {
  if (corpus.empty()) throw std::invalid_argument("build_vocabulary: empty corpus");
  if (min_doc_freq < 1) throw std::invalid_argument("build_vocabulary: min_doc_freq must be >= 1");
  if (max_terms && *max_terms == 0) throw std::invalid_argument("empty vocabulary requested");

  std::map<std::string, std::size_t> df;
  for (const auto& doc : corpus) {
    const std::set<std::string> unique(doc.begin(), doc.end());
    for (const auto& t : unique) ++df[t];
  }
  std::vector<std::pair<std::string, std::size_t>> kept;
  for (auto& [term, n] : df)
    if (n >= min_doc_freq) kept.emplace_back(term, n);

  if (max_terms && kept.size() > *max_terms) {
    std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    kept.resize(*max_terms);
  }
  std::vector<std::string> terms;
  terms.reserve(kept.size());
  for (auto& [term, n] : kept) terms.push_back(std::move(term));
  return Vocabulary(std::move(terms));
}

TermDocMatrix bow_vectorize(const Corpus& corpus, const Vocabulary& vocab) {
  TermDocMatrix m;
  m.rows = corpus.size();
  m.cols = vocab.size();
  m.data.assign(m.rows * m.cols, 0.0);
  m.mode = MatrixMode::Counts;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (const auto& t : corpus[d]) {
      if (auto j = vocab.index_of(t)) m(d, *j) += 1.0;
    }
  }
  return m;
}

std::vector<double> fit_idf(const Corpus& corpus, const Vocabulary& vocab) {
  if (corpus.empty()) throw std::invalid_argument("tf_idf: empty corpus");
  std::vector<std::size_t> n(vocab.size(), 0);
  for (const auto& doc : corpus) {
    std::vector<bool> seen(vocab.size(), false);
    for (const auto& t : doc) {
      if (auto j = vocab.index_of(t); j && !seen[*j]) {
        seen[*j] = true;
        ++n[*j];
      }
    }
  }
  const auto N = static_cast<double>(corpus.size());
  std::vector<double> idf(vocab.size());
  for (std::size_t j = 0; j < vocab.size(); ++j) {
    if (n[j] == 0) throw std::invalid_argument("tf_idf: term '" + vocab.terms()[j] + "' occurs in no document");
    idf[j] = std::log(N / static_cast<double>(n[j]));
  }
  return idf;
}

TermDocMatrix apply_idf(const Corpus& corpus, const Vocabulary& vocab, const std::vector<double>& idf) {
  if (idf.size() != vocab.size()) throw std::invalid_argument("apply_idf: idf length != vocabulary size");
  TermDocMatrix m = bow_vectorize(corpus, vocab);
  m.mode = MatrixMode::TfIdf;
  for (std::size_t d = 0; d < m.rows; ++d)
    for (std::size_t j = 0; j < m.cols; ++j) m(d, j) *= idf[j];
  return m;
}

TermDocMatrix tf_idf(const Corpus& corpus, const Vocabulary& vocab) {
  return apply_idf(corpus, vocab, fit_idf(corpus, vocab));
}

}  // namespace opt::text
