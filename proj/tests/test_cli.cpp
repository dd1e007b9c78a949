#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "twodist/cli/commands.hpp"
#include "twodist/cli/report.hpp"

using namespace twodist;
using namespace twodist::cli;

namespace {

const std::filesystem::path kData = TWODIST_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

std::string row(const CommandReport& r, const std::string& title, const std::string& name) {
  for (const auto& s : r.sections) {
    if (s.title != title) continue;
    for (const auto& rw : s.rows) {
      if (rw.name == name) return rw.value;
    }
  }
  return "<missing " + title + "/" + name + ">";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::vector<std::string>>& commands() {
  static const std::vector<std::vector<std::string>> all = {
      {"verify", "lisonek"},
      {"params", "9", "2", "1", "0"},
      {"params", "27", "7", "3", "1"},
      {"embed", data("lisonek.json")},
      {"embed", data("lisonek.json"), "--branch", "lt2", "--dump-gram"},
      {"embed", data("lisonek.json"), "--r2", "2*sqrt(7)"},
      {"solve", "--smax", "8", "--mmax", "50"},
      {"solve", "--smax", "8", "--mmax", "50", "--no-gate"},
      {"classify", "--zmax", "5"},
      {"regions", "--which", "g1", "--zmin", "-6", "--zmax", "6", "--xmax", "60"},
      {"regions", "--which", "g2", "--zmin", "-15", "--zmax", "12", "--xmax", "60"},
      {"identities"},
  };
  return all;
}

}  // namespace

TEST_CASE("text and JSON carry the same values") {
  for (const auto& args : commands()) {
    CAPTURE(args.front());
    const auto text = call(args);
    auto jargs = args;
    jargs.insert(jargs.begin() + 1, "--json");
    const auto json = call(jargs);
    REQUIRE(text.code == json.code);
    const auto from_text = parse_text_report(text.out);
    const auto from_json = report_from_json(nlohmann::ordered_json::parse(json.out));
    CHECK(from_text == from_json);
    CHECK(from_text.text() == text.out);
  }
}

TEST_CASE("exit codes") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {{"verify", "lisonek"}, kExitOk},
      {{"params", "9", "2", "1", "0"}, kExitOk},
      {{"identities"}, kExitOk},
      {{"classify", "--zmax", "3"}, kExitOk},
      {{"solve", "--smax", "8", "--mmax", "50"}, kExitOk},
      {{"embed", data("lisonek.json")}, kExitOk},
      {{"embed", data("disjoint_pairs.json")}, kExitFailure},
      {{"embed", data("bad_unequal_sizes.json")}, kExitUsage},
      {{"embed", data("bad_unsorted.json")}, kExitUsage},
      {{"embed", data("bad_malformed.json")}, kExitUsage},
      {{"embed", data("no_such_file.json")}, kExitUsage},
      {{"embed", data("lisonek.json"), "--r2", "-1"}, kExitUsage},
      {{"embed", data("lisonek.json"), "--r2", "sqrt("}, kExitUsage},
      {{"embed", data("lisonek.json"), "--branch", "sideways"}, kExitUsage},
      {{"params", "9", "2", "0", "1"}, kExitUsage},
      {{"params", "9", "two", "1", "0"}, kExitUsage},
      {{"solve", "--smax", "1"}, kExitUsage},
      {{"classify", "--zmax", "0"}, kExitUsage},
      {{"regions", "--which", "g3"}, kExitUsage},
      {{"regions", "--which", "g1", "--zmin", "5", "--zmax", "4"}, kExitUsage},
      {{"frobnicate"}, kExitUsage},
      {{"verify", "lisonek", "--bogus"}, kExitUsage},
      {{}, kExitUsage},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    const auto r = call(c.args);
    CHECK(r.code == c.code);
    if (c.code == kExitUsage) CHECK_FALSE(r.err.empty());
    if (c.code == kExitFailure) CHECK(parse_text_report(r.out).status == Status::Failure);
  }
}

TEST_CASE("json flag may come first or last") {
  const auto a = call({"--json", "params", "9", "2", "1", "0"});
  const auto b = call({"params", "9", "2", "1", "0", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::ordered_json::parse(a.out);
  CHECK(j["command"] == "params");
  CHECK(j["status"] == "ok");
}

TEST_CASE("params table") {
  const auto r = run({"params", "9", "2", "1", "0"});
  REQUIRE(r.report);
  const auto& rep = *r.report;
  CHECK(row(rep, "Parameters", "Lambda") == "1");
  CHECK(row(rep, "Parameters", "T") == "8");
  CHECK(row(rep, "Parameters", "N") == "7");
  CHECK(row(rep, "Parameters", "P") == "2");
  CHECK(row(rep, "Parameters", "n") == "36");
  CHECK(row(rep, "Parameters", "k") == "14");
  CHECK(row(rep, "Parameters", "r") == "5");
  CHECK(row(rep, "Parameters", "s") == "-2");
  CHECK(row(rep, "Integrality gate", "pass") == "true");
}

TEST_CASE("verify lisonek") {
  const auto r = run({"verify", "lisonek"});
  CHECK(r.exit_code == kExitOk);
  REQUIRE(r.report);
  const auto& rep = *r.report;
  CHECK(row(rep, "Coordinates", "points") == "45");
  CHECK(row(rep, "Coordinates", "distances") == "{sqrt(2), 2}");
  CHECK(row(rep, "Coordinates", "X1 radius from origin") == "2/3*sqrt(3)");
  CHECK(row(rep, "Coordinates", "X2 radius from origin") == "sqrt(2)");
  CHECK(row(rep, "Projector", "trace") == "8");
  CHECK(row(rep, "Classification", "case") == "A");
}

TEST_CASE("solve reports two certificates on the small box") {
  const auto r = run({"solve", "--smax", "8", "--mmax", "50"});
  CHECK(r.exit_code == kExitOk);
  REQUIRE(r.report);
  CHECK(row(*r.report, "Search", "certificates") == "2");
  CHECK(row(*r.report, "Certificate 1", "z") == "1");
  CHECK(row(*r.report, "Certificate 2", "z") == "2");
}

TEST_CASE("embed with the Gram dump matches the golden file") {
  const auto r = call({"embed", data("lisonek.json"), "--dump-gram"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp(kData.parent_path() / "golden" / "lisonek_dump_gram.txt"));
  const auto rep = parse_text_report(r.out);
  // row 0 is a point: diagonal, then another point, then an incident and a non-incident block
  CHECK(row(rep, "Projector E", "row 0").rfind("4/9, -1/18, ", 0) == 0);
}
