#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opt::harness {

struct ReportRow {
  std::string method;
  std::map<std::string, double> values;
  std::vector<std::uint64_t> seeds;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// One row per method; every row carries the same metric columns, which are
/// kept in alphabetical order.
struct TrialReport {
  std::string task;
  std::vector<std::string> columns;
  std::vector<ReportRow> rows;

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

enum class ReportFormat { Csv, Json, Text };

std::optional<ReportFormat> parse_report_format(std::string_view name);
std::string_view extension(ReportFormat f);

/// Shortest decimal string that reads back as the same double.
std::string format_number(double v);

/// Csv: header "method,<columns>", CRLF rows, shortest round-trip numbers.
/// Json: task, columns and rows with seeds. Text: aligned table, 4 decimals.
/// Throws std::invalid_argument for a report without rows.
std::string render_report(const TrialReport& report, ReportFormat format);

/// Throws std::runtime_error when the file cannot be written.
void emit_report(const TrialReport& report, ReportFormat format, const std::filesystem::path& path);

/// Inverse of render_report(…, Json). Throws DataError on malformed input.
TrialReport parse_report_json(std::string_view text);

}  // namespace opt::harness
