#include "spernerlab/family_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "spernerlab/errors.hpp"
#include "spernerlab/params.hpp"

namespace spernerlab {

nlohmann::json family_to_json(const Family& fam) {
  nlohmann::json sets = nlohmann::json::array();
  for (Mask m : fam) sets.push_back(elements_of(m));
  return {{"n", fam.n()}, {"sets", std::move(sets)}};
}

Family family_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("family: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("family: missing integer field \"n\"");
  if (!j.contains("sets") || !j["sets"].is_array()) throw ParseError("family: missing array field \"sets\"");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1 || n > kMaxEnumerationN)
    throw ParseError("family: n must lie in [1, " + std::to_string(kMaxEnumerationN) + "]");
  std::vector<Mask> masks;
  for (const auto& s : j["sets"]) {
    if (!s.is_array()) throw ParseError("family: every set must be an array");
    Mask m = 0;
    for (const auto& e : s) {
      if (!e.is_number_integer()) throw ParseError("family: elements must be integers");
      const auto v = e.get<std::int64_t>();
      if (v < 1 || v > n) throw ParseError("family: element " + std::to_string(v) + " outside [1, n]");
      const Mask bit = Mask{1} << (v - 1);
      if (m & bit) throw ParseError("family: element " + std::to_string(v) + " repeated within a set");
      m |= bit;
    }
    masks.push_back(m);
  }
  return Family(static_cast<int>(n), std::move(masks));
}

std::string format_family(const Family& fam) {
  std::ostringstream os;
  os << "{\"n\": " << fam.n() << ", \"sets\": [";
  bool first = true;
  for (Mask m : fam) {
    os << (first ? "" : ",") << "[";
    bool fe = true;
    for (int e : elements_of(m)) {
      os << (fe ? "" : ",") << e;
      fe = false;
    }
    os << "]";
    first = false;
  }
  os << "]}";
  return os.str();
}

Family parse_family(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("family: ") + e.what());
  }
  return family_from_json(j);
}

Family read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

void write_family_file(const std::filesystem::path& path, const Family& fam) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_family(fam) << "\n";
}

}  // namespace spernerlab
