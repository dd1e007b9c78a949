#include "twodist/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "twodist/errors.hpp"

namespace twodist::cli {

namespace {
constexpr const char* kFailures = "Failures";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(' ');
  return s.substr(b, e - b + 1);
}
}  // namespace

Section& Section::add(std::string name, std::string value) {
  rows.push_back({std::move(name), std::move(value)});
  return *this;
}

std::string to_string(Status s) { return s == Status::Ok ? "ok" : "failure"; }

Section& CommandReport::section(std::string title) {
  sections.push_back({std::move(title), {}});
  return sections.back();
}

void CommandReport::fail(std::string what) {
  status = Status::Failure;
  failures.push_back(std::move(what));
}

namespace {
std::vector<Section> all_sections(const CommandReport& r) {
  std::vector<Section> out = r.sections;
  if (!r.failures.empty()) {
    Section f{kFailures, {}};
    for (const auto& w : r.failures) f.add("check", w);
    out.push_back(std::move(f));
  }
  return out;
}

/// Moves a trailing "Failures" section back into the failure list.
void split_failures(CommandReport& r) {
  if (r.sections.empty() || r.sections.back().title != kFailures) return;
  for (const auto& row : r.sections.back().rows) r.failures.push_back(row.value);
  r.sections.pop_back();
}
}  // namespace

std::string CommandReport::text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "status: " << to_string(status) << "\n";
  for (const auto& s : all_sections(*this)) {
    os << "\n[" << s.title << "]\n";
    std::size_t width = 0;
    for (const auto& r : s.rows) width = std::max(width, r.name.size());
    for (const auto& r : s.rows) {
      os << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << "= " << r.value
         << "\n";
    }
  }
  return os.str();
}

nlohmann::ordered_json CommandReport::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["status"] = to_string(status);
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto& s : all_sections(*this)) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : s.rows) rows.push_back({{"name", r.name}, {"value", r.value}});
    j["sections"].push_back({{"title", s.title}, {"rows", std::move(rows)}});
  }
  return j;
}

CommandReport parse_text_report(const std::string& text) {
  CommandReport out;
  std::istringstream is(text);
  std::string line;
  auto header = [&](const std::string& key) {
    if (!std::getline(is, line) || line.rfind(key + ": ", 0) != 0) {
      throw ParseError("report header '" + key + "' missing");
    }
    return line.substr(key.size() + 2);
  };
  out.command = header("command");
  const std::string status = header("status");
  if (status != "ok" && status != "failure") throw ParseError("bad status " + status);
  out.status = status == "ok" ? Status::Ok : Status::Failure;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      out.sections.push_back({line.substr(1, line.size() - 2), {}});
      continue;
    }
    // names are padded by at least two spaces, and may contain " = " themselves
    const auto pad = line.find("  = ", 2);
    if (out.sections.empty() || pad == std::string::npos) throw ParseError("bad report line: " + line);
    out.sections.back().add(trim(line.substr(0, pad)), line.substr(pad + 4));
  }
  split_failures(out);
  return out;
}

CommandReport report_from_json(const nlohmann::ordered_json& j) {
  CommandReport out;
  out.command = j.at("command").get<std::string>();
  out.status = j.at("status").get<std::string>() == "ok" ? Status::Ok : Status::Failure;
  for (const auto& s : j.at("sections")) {
    Section sec{s.at("title").get<std::string>(), {}};
    for (const auto& r : s.at("rows")) {
      sec.add(r.at("name").get<std::string>(), r.at("value").get<std::string>());
    }
    out.sections.push_back(std::move(sec));
  }
  split_failures(out);
  return out;
}

bool operator==(const Row& a, const Row& b) { return a.name == b.name && a.value == b.value; }
bool operator==(const Section& a, const Section& b) {
  return a.title == b.title && a.rows == b.rows;
}
bool operator==(const CommandReport& a, const CommandReport& b) {
  return a.command == b.command && a.status == b.status && a.sections == b.sections &&
         a.failures == b.failures;
}

}  // namespace twodist::cli
