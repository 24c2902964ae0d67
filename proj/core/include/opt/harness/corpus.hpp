#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace opt::harness {

struct LabeledDocument {
  std::string id;
  std::string text;
  std::string label;
};

enum class CorpusFormat { Csv, Jsonl };

/// ".jsonl" and ".ndjson" map to Jsonl, anything else to Csv.
CorpusFormat corpus_format_from_path(const std::filesystem::path& path);

struct LabeledCorpus {
  std::vector<LabeledDocument> documents;
  /// Sorted distinct labels.
  std::vector<std::string> labels;
  /// Ascending document indices; together a partition of documents.
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  /// Documents dropped because their cleaned text repeated an earlier one.
  std::size_t duplicates_removed = 0;
};

/// Parses id/text/label records (CSV with a header row, or one JSON object per
/// line), drops documents whose cleaned text repeats an earlier one, and
/// splits each label's documents into train and test by a seeded shuffle:
/// round(ratio·n) of them go to train, at least one.
///
/// Throws DataError for a missing column (named in the message), a malformed
/// line (with its number), fewer than 10 documents, fewer than 2 labels or a
/// ratio outside (0, 1).
LabeledCorpus parse_corpus(std::string_view content, CorpusFormat format, double split_ratio, std::uint64_t seed);

LabeledCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format, double split_ratio,
                          std::uint64_t seed);

}  // namespace opt::harness
