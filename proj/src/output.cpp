#include "hermnest/output.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hermnest/errors.hpp"

namespace hermnest {

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "markdown" || s == "md") return OutputFormat::Markdown;
  if (s == "json") return OutputFormat::Json;
  fail(Err::BadArgument, "unknown format '" + s + "' (csv|markdown|json)");
}

void OutputDocument::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    fail(Err::BadArgument, "row arity does not match the column schema");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void OutputDocument::render(std::ostream& os, OutputFormat fmt) const {
  switch (fmt) {
    case OutputFormat::Csv: {
      os << "# command=" << command << " q=" << q << " version=" << version << '\n';
      for (size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << csv_escape(columns[c]);
      os << '\n';
      for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_escape(row[c]);
        os << '\n';
      }
      break;
    }
    case OutputFormat::Markdown: {
      os << "### " << command << " (q = " << q << ")\n\n";
      os << '|';
      for (const auto& c : columns) os << ' ' << c << " |";
      os << "\n|";
      for (size_t c = 0; c < columns.size(); ++c) os << "---|";
      os << '\n';
      for (const auto& row : rows) {
        os << '|';
        for (const auto& cell : row) os << ' ' << cell << " |";
        os << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["metadata"] = {{"command", command}, {"q", q}, {"version", version}};
      j["columns"] = columns;
      j["rows"] = rows;
      os << j.dump(2) << '\n';
      break;
    }
  }
}

std::string OutputDocument::render(OutputFormat fmt) const {
  std::ostringstream os;
  render(os, fmt);
  return os.str();
}

OutputDocument OutputDocument::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  OutputDocument d;
  d.command = j.at("metadata").at("command").get<std::string>();
  d.q = j.at("metadata").at("q").get<uint32_t>();
  d.version = j.at("metadata").at("version").get<std::string>();
  d.columns = j.at("columns").get<std::vector<std::string>>();
  d.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  return d;
}

}  // namespace hermnest
