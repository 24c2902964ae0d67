#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opt::harness {

struct CsvRecord {
  std::vector<std::string> fields;
  /// 1-based line on which the record starts.
  std::size_t line = 0;
};

/// RFC 4180: comma separated, CRLF or LF line ends, fields optionally quoted
/// with '"' and quotes escaped by doubling. Blank lines are skipped. Throws
/// DataError naming the line of an unterminated or malformed quoted field.
std::vector<CsvRecord> parse_csv(std::string_view text);

/// Quotes the field when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

void write_csv_row(std::ostream& out, std::span<const std::string> fields);

}  // namespace opt::harness
