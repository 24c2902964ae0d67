#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace opt::text {

/// Contraction expansions. Keys starting with '-' are suffix rules
/// ("-'ll" -> " will"); all other keys match a whole word ("can't" -> "cannot").
/// Whole-word entries win over suffix rules; among suffix rules the longest
/// key wins.
class ContractionTable {
public:
  ContractionTable() = default;

  void add(std::string key, std::string expansion);
  std::string expand(std::string_view word) const;
  std::size_t size() const { return words_.size() + suffixes_.size(); }

  /// Built-in English table (version "en-v1").
  static const ContractionTable& english();

  /// One entry per line: key, whitespace, expansion. Blank lines and lines
  /// starting with '#' are skipped. Throws std::runtime_error on I/O failure.
  static ContractionTable load(const std::filesystem::path& path);

private:
  std::vector<std::pair<std::string, std::string>> words_;
  std::vector<std::pair<std::string, std::string>> suffixes_;
};

/// Throws std::invalid_argument on malformed UTF-8.
void validate_utf8(std::string_view s);

/// Lowercases ASCII, maps U+2019 to an apostrophe, expands contractions,
/// replaces punctuation and symbols by spaces and collapses whitespace.
/// Non-ASCII letters are kept as they are; Latin-1 and general punctuation
/// blocks (U+00A0..U+00BF, U+2000..U+206F) count as punctuation.
std::string clean_text(std::string_view raw, const ContractionTable& table = ContractionTable::english());

/// Whitespace split, order preserved.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace opt::text
