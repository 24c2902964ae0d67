#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opt/text/stopwords.hpp"

namespace opt::text {

using TokenList = std::vector<std::string>;
using Corpus = std::vector<TokenList>;

struct Document {
  std::string id;
  std::string raw;
  TokenList tokens;
};

struct PipelineOptions {
  bool remove_stopwords = true;
  bool stem = false;
  const Stoplist* stoplist = nullptr;  // null means Stoplist::english()
};

/// clean_text, tokenize, then optional stop-word removal and stemming.
TokenList preprocess(std::string_view raw, const PipelineOptions& opts = {});

/// Terms sorted lexicographically, with their column indices.
class Vocabulary {
public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> terms);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<std::string>& terms() const { return terms_; }
  std::optional<std::size_t> index_of(const std::string& term) const;

private:
  std::vector<std::string> terms_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Terms appearing in at least min_doc_freq documents, optionally truncated
/// to the max_terms highest document frequencies (ties broken
/// lexicographically). Throws std::invalid_argument on an empty corpus,
/// min_doc_freq < 1 or max_terms == 0 ("empty vocabulary requested").
Vocabulary build_vocabulary(const Corpus& corpus, std::size_t min_doc_freq = 1,
                            std::optional<std::size_t> max_terms = std::nullopt);

enum class MatrixMode { Counts, TfIdf };

struct TermDocMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;
  MatrixMode mode = MatrixMode::Counts;

  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

TermDocMatrix bow_vectorize(const Corpus& corpus, const Vocabulary& vocab);

/// IDF(w) = ln(N / n_w) over the given corpus. Throws std::invalid_argument
/// for an empty corpus or a vocabulary term present in no document.
std::vector<double> fit_idf(const Corpus& corpus, const Vocabulary& vocab);

/// Raw counts times the given IDF vector.
TermDocMatrix apply_idf(const Corpus& corpus, const Vocabulary& vocab, const std::vector<double>& idf);

/// apply_idf(corpus, vocab, fit_idf(corpus, vocab)).
TermDocMatrix tf_idf(const Corpus& corpus, const Vocabulary& vocab);

}  // namespace opt::text
