#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "twodist/designs/incidence.hpp"

namespace twodist::designs {

/// Parses {"m": int, "blocks": [[int, ...], ...]}. Blocks must be strictly
/// ascending and of equal size. Errors are ParseError with the offending
/// field path ("blocks[3][1]") or the JSON line/column.
IncidenceDesign parse_design(std::string_view json_text, const std::string& source = "<input>");

IncidenceDesign load_design(const std::filesystem::path& path);

std::string design_to_json(const IncidenceDesign& d);

void save_design(const IncidenceDesign& d, const std::filesystem::path& path);

}  // namespace twodist::designs
