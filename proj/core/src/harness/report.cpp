#include "opt/harness/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opt/harness/csv.hpp"
#include "opt/harness/errors.hpp"

namespace opt::harness {

namespace {

std::string render_csv(const TrialReport& r) {
  std::ostringstream out;
  std::vector<std::string> fields{"method"};
  fields.insert(fields.end(), r.columns.begin(), r.columns.end());
  write_csv_row(out, fields);
  for (const auto& row : r.rows) {
    fields.assign(1, row.method);
    for (const auto& c : r.columns) fields.push_back(format_number(row.values.at(c)));
    write_csv_row(out, fields);
  }
  return out.str();
}

std::string render_json(const TrialReport& r) {
  nlohmann::ordered_json j;
  j["task"] = r.task;
  j["columns"] = r.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json jr;
    jr["method"] = row.method;
    jr["values"] = nlohmann::ordered_json::object();
    for (const auto& c : r.columns) jr["values"][c] = row.values.at(c);
    jr["seeds"] = row.seeds;
    j["rows"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

std::string render_text(const TrialReport& r) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"Method"};
  header.insert(header.end(), r.columns.begin(), r.columns.end());
  cells.push_back(header);
  for (const auto& row : r.rows) {
    std::vector<std::string> line{row.method};
    for (const auto& c : r.columns) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.4f", row.values.at(c));
      line.emplace_back(buf);
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());

  std::ostringstream out;
  auto print = [&](const std::vector<std::string>& line) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k) out << "  ";
      const std::string pad(width[k] - line[k].size(), ' ');
      out << (k == 0 ? line[k] + pad : pad + line[k]);
    }
    out << '\n';
  };
  print(cells.front());
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (std::size_t i = 1; i < cells.size(); ++i) print(cells[i]);
  return out.str();
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "text" || name == "txt" || name == "table") return ReportFormat::Text;
  return std::nullopt;
}

std::string_view extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::Csv: return ".csv";
    case ReportFormat::Json: return ".json";
    case ReportFormat::Text: return ".txt";
  }
  return ".txt";
}

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string render_report(const TrialReport& report, ReportFormat format) {
  if (report.rows.empty()) throw std::invalid_argument("report has no rows");
  switch (format) {
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Text: return render_text(report);
  }
  return {};
}

void emit_report(const TrialReport& report, ReportFormat format, const std::filesystem::path& path) {
  const std::string body = render_report(report, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write report: " + path.string());
  out << body;
  out.flush();
  if (!out) throw std::runtime_error("cannot write report: " + path.string());
}

TrialReport parse_report_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    TrialReport r;
    r.task = j.at("task").get<std::string>();
    r.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& jr : j.at("rows")) {
      ReportRow row;
      row.method = jr.at("method").get<std::string>();
      row.values = jr.at("values").get<std::map<std::string, double>>();
      row.seeds = jr.at("seeds").get<std::vector<std::uint64_t>>();
      r.rows.push_back(std::move(row));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("report JSON: ") + e.what());
  }
}

}  // namespace opt::harness
