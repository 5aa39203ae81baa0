#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "spernerlab/family.hpp"

namespace spernerlab {

// Family JSON: {"n": 6, "sets": [[1,2,3],[1,2,4]]} with 1-based elements,
// each set ascending, sets in canonical order.

nlohmann::json family_to_json(const Family& fam);
/// Throws ParseError on a malformed object or out-of-range element.
Family family_from_json(const nlohmann::json& j);

/// Canonical text form, byte-for-byte stable.
std::string format_family(const Family& fam);
Family parse_family(std::string_view text);

Family read_family_file(const std::filesystem::path& path);
void write_family_file(const std::filesystem::path& path, const Family& fam);

}  // namespace spernerlab
