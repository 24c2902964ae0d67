#pragma once

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opt::text {

struct Stoplist {
  std::string version;
  std::set<std::string, std::less<>> words;

  bool contains(std::string_view w) const { return words.find(w) != words.end(); }

  /// English list "en-v1": articles, pronouns, prepositions, conjunctions,
  /// auxiliaries and negations.
  static const Stoplist& english();
  /// english() minus the negations and contrast words (not, no, nor, never, but).
  static const Stoplist& english_sentiment();
  static Stoplist none();

  /// One lowercase word per line; '#' starts a comment line. The version is
  /// the file stem. Throws std::runtime_error on I/O failure and
  /// std::invalid_argument on an entry with uppercase letters.
  static Stoplist load(const std::filesystem::path& path);
};

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens, const Stoplist& stoplist);

}  // namespace opt::text
