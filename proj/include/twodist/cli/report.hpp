#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace twodist::cli {

struct Row {
  std::string name;
  std::string value;  ///< exact value in the scalar grammar, or a plain word
};

struct Section {
  std::string title;
  std::vector<Row> rows;
  Section& add(std::string name, std::string value);
};

enum class Status { Ok, Failure };

std::string to_string(Status s);

/// Output of one command. Text and JSON are produced from the same rows.
struct CommandReport {
  std::string command;
  Status status = Status::Ok;
  std::vector<Section> sections;
  /// Failed expectations, printed last as a "Failures" section.
  std::vector<std::string> failures;

  Section& section(std::string title);
  /// Marks the report failed and records why.
  void fail(std::string what);
  bool ok() const { return status == Status::Ok; }

  /// command/status header, then "[title]" and two aligned columns per row.
  std::string text() const;
  /// {"command", "status", "sections": [{"title", "rows": [{"name", "value"}]}]}
  nlohmann::ordered_json json() const;
};

/// Reads the format written by text() back into a report.
CommandReport parse_text_report(const std::string& text);
CommandReport report_from_json(const nlohmann::ordered_json& j);

bool operator==(const Row& a, const Row& b);
bool operator==(const Section& a, const Section& b);
bool operator==(const CommandReport& a, const CommandReport& b);

}  // namespace twodist::cli
