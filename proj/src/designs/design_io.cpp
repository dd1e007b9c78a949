#include "twodist/designs/design_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "twodist/errors.hpp"

namespace twodist::designs {

using nlohmann::json;

namespace {

// Converts a byte offset into "line L, column C".
std::string locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

IncidenceDesign parse_design(std::string_view json_text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": malformed JSON at " + locate(json_text, e.byte) + ": " +
                     e.what());
  }
  auto fail = [&](const std::string& path, const std::string& what) {
    return ParseError(source + ": " + path + ": " + what);
  };
  if (!doc.is_object()) throw fail("$", "expected an object");
  if (!doc.contains("m")) throw fail("m", "missing field");
  if (!doc.contains("blocks")) throw fail("blocks", "missing field");
  const json& jm = doc["m"];
  if (!jm.is_number_integer() || jm.get<long long>() < 1 || jm.get<long long>() > 1 << 20) {
    throw fail("m", "expected a positive integer");
  }
  const int m = jm.get<int>();
  const json& jb = doc["blocks"];
  if (!jb.is_array()) throw fail("blocks", "expected an array");

  std::vector<Block> blocks;
  blocks.reserve(jb.size());
  for (std::size_t i = 0; i < jb.size(); ++i) {
    const std::string path = "blocks[" + std::to_string(i) + "]";
    if (!jb[i].is_array()) throw fail(path, "expected an array of point labels");
    if (!blocks.empty() && jb[i].size() != blocks.front().size()) {
      throw fail(path, "block size " + std::to_string(jb[i].size()) + " differs from " +
                           std::to_string(blocks.front().size()));
    }
    Block b;
    for (std::size_t j = 0; j < jb[i].size(); ++j) {
      const std::string epath = path + "[" + std::to_string(j) + "]";
      const json& e = jb[i][j];
      if (!e.is_number_integer()) throw fail(epath, "expected an integer");
      const long long v = e.get<long long>();
      if (v < 0 || v >= m) throw fail(epath, std::to_string(v) + " outside [0, m)");
      if (!b.empty() && b.back() >= v) throw fail(epath, "blocks must be strictly ascending");
      b.push_back(static_cast<int>(v));
    }
    blocks.push_back(std::move(b));
  }
  return IncidenceDesign(m, std::move(blocks));
}

IncidenceDesign load_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_design(buf.str(), path.string());
}

std::string design_to_json(const IncidenceDesign& d) {
  json doc;
  doc["m"] = d.point_count();
  doc["blocks"] = d.blocks();
  return doc.dump() + "\n";
}

void save_design(const IncidenceDesign& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot write file");
  out << design_to_json(d);
}

}  // namespace twodist::designs
