#include "opt/text/clean.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace opt::text {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Length of the UTF-8 sequence starting with lead byte c, 0 if invalid.
std::size_t sequence_length(unsigned char c) {
  if (c < 0x80) return 1;
  if (c >= 0xC2 && c <= 0xDF) return 2;
  if (c >= 0xE0 && c <= 0xEF) return 3;
  if (c >= 0xF0 && c <= 0xF4) return 4;
  return 0;
}

char32_t decode_at(std::string_view s, std::size_t i, std::size_t len) {
  const auto b = [&](std::size_t k) { return static_cast<unsigned char>(s[i + k]); };
  switch (len) {
    case 1: return b(0);
    case 2: return ((b(0) & 0x1Fu) << 6) | (b(1) & 0x3Fu);
    case 3: return ((b(0) & 0x0Fu) << 12) | ((b(1) & 0x3Fu) << 6) | (b(2) & 0x3Fu);
    default: return ((b(0) & 0x07u) << 18) | ((b(1) & 0x3Fu) << 12) | ((b(2) & 0x3Fu) << 6) | (b(3) & 0x3Fu);
  }
}

bool is_punct_codepoint(char32_t cp) {
  return (cp >= 0xA0 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7 || (cp >= 0x2000 && cp <= 0x206F) ||
         (cp >= 0x3000 && cp <= 0x303F) || cp == 0xFEFF;
}

bool is_word_byte(unsigned char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80; }

}  // namespace

void ContractionTable::add(std::string key, std::string expansion) {
  const bool suffix = !key.empty() && key.front() == '-';
  if (suffix) key.erase(key.begin());
  if (key.empty()) throw std::invalid_argument("contraction table: empty key");
  (suffix ? suffixes_ : words_).emplace_back(std::move(key), std::move(expansion));
  std::stable_sort(suffixes_.begin(), suffixes_.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
}

std::string ContractionTable::expand(std::string_view word) const {
  for (const auto& [k, v] : words_)
    if (word == k) return v;
  for (const auto& [k, v] : suffixes_) {
    if (word.size() > k.size() && ends_with(word, k)) {
      return std::string(word.substr(0, word.size() - k.size())) + v;
    }
  }
  return std::string(word);
}

const ContractionTable& ContractionTable::english() {
  static const ContractionTable table = [] {
    ContractionTable t;
    const std::pair<const char*, const char*> words[] = {
        {"can't", "cannot"},   {"won't", "will not"},  {"shan't", "shall not"}, {"ain't", "is not"},
        {"it's", "it is"},     {"that's", "that is"},  {"what's", "what is"},   {"there's", "there is"},
        {"here's", "here is"}, {"he's", "he is"},      {"she's", "she is"},     {"who's", "who is"},
        {"where's", "where is"}, {"how's", "how is"},  {"let's", "let us"},     {"y'all", "you all"},
        {"o'clock", "oclock"},
    };
    const std::pair<const char*, const char*> suffixes[] = {
        {"-n't", " not"}, {"-'re", " are"}, {"-'ve", " have"}, {"-'ll", " will"},
        {"-'d", " would"}, {"-'m", " am"},  {"-'s", ""},
    };
    for (const auto& [k, v] : words) t.add(k, v);
    for (const auto& [k, v] : suffixes) t.add(k, v);
    return t;
  }();
  return table;
}

ContractionTable ContractionTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open contraction table: " + path.string());
  ContractionTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto sep = line.find_first_of(" \t", first);
    std::string key = line.substr(first, sep == std::string::npos ? std::string::npos : sep - first);
    std::string value;
    if (sep != std::string::npos) {
      const auto vstart = line.find_first_not_of(" \t", sep);
      if (vstart != std::string::npos) value = line.substr(vstart);
    }
    // Suffix rules attach to the preceding word, so their expansion starts
    // with a space unless it is empty.
    if (key.front() == '-' && !value.empty()) value.insert(value.begin(), ' ');
    t.add(std::move(key), std::move(value));
  }
  return t;
}

void validate_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    const std::size_t len = sequence_length(c);
    if (len == 0 || i + len > s.size()) {
      throw std::invalid_argument("invalid UTF-8 at byte " + std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
        throw std::invalid_argument("invalid UTF-8 at byte " + std::to_string(i));
      }
    }
    const char32_t cp = decode_at(s, i, len);
    if ((len == 3 && cp < 0x800) || (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw std::invalid_argument("invalid UTF-8 at byte " + std::to_string(i));
    }
    i += len;
  }
}

std::string clean_text(std::string_view raw, const ContractionTable& table) {
  validate_utf8(raw);

  // Pass 1: lowercase, fold U+2019 to '\'', blank out punctuation code points
  // other than the apostrophe.
  std::string s;
  s.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    const auto c = static_cast<unsigned char>(raw[i]);
    const std::size_t len = sequence_length(c);
    if (len == 1) {
      if (c >= 'A' && c <= 'Z') {
        s.push_back(static_cast<char>(c - 'A' + 'a'));
      } else if (is_word_byte(c) || c == '\'') {
        s.push_back(static_cast<char>(c));
      } else {
        s.push_back(' ');
      }
    } else {
      const char32_t cp = decode_at(raw, i, len);
      if (cp == 0x2019) {
        s.push_back('\'');
      } else if (is_punct_codepoint(cp)) {
        s.push_back(' ');
      } else {
        s.append(raw.substr(i, len));
      }
    }
    i += len;
  }

  // Pass 2: expand each word, drop leftover apostrophes, collapse spaces.
  std::string out;
  out.reserve(s.size());
  auto emit = [&](std::string_view piece) {
    for (char ch : piece) {
      const char c = ch == '\'' ? ' ' : ch;
      if (c == ' ') {
        if (!out.empty() && out.back() != ' ') out.push_back(' ');
      } else {
        out.push_back(c);
      }
    }
  };
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      emit(" ");
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    // Trim apostrophes used as quotes before the lookup.
    std::size_t a = i, b = j;
    while (a < b && s[a] == '\'') ++a;
    while (b > a && s[b - 1] == '\'') --b;
    emit(" ");
    if (a < b) emit(table.expand(std::string_view(s).substr(a, b - a)));
    emit(" ");
    i = j;
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace opt::text
