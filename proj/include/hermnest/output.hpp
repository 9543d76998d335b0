#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hermnest {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum class OutputFormat { Csv, Markdown, Json };
OutputFormat parse_format(const std::string& s);  // BadArgument on unknown names

// Deterministic tabular result of one CLI command.
struct OutputDocument {
  std::string command;
  uint32_t q = 0;
  std::string version = kArtifactVersion;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  void render(std::ostream& os, OutputFormat fmt) const;
  std::string render(OutputFormat fmt) const;

  // strict inverse of the JSON rendering
  static OutputDocument from_json(const std::string& text);

  friend bool operator==(const OutputDocument& a, const OutputDocument& b) {
    return a.command == b.command && a.q == b.q && a.version == b.version &&
           a.columns == b.columns && a.rows == b.rows;
  }
};

}  // namespace hermnest
