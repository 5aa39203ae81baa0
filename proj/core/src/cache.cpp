#include "spernerlab/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef SPERNERLAB_VERSION
#define SPERNERLAB_VERSION "0.0.0"
#endif

namespace spernerlab {

const char* version() { return SPERNERLAB_VERSION; }

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("SPERNERLAB_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "spernerlab";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "spernerlab";
  return ".spernerlab-cache";
}

std::string cache_key(const std::string& command, const nlohmann::json& params, std::uint64_t seed) {
  // nlohmann::json objects are key-sorted, so dump() is canonical.
  const nlohmann::json tuple{command, params, std::to_string(seed), version()};
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tuple.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResultCache::store(const std::string& key, const std::string& contents) const {
  std::filesystem::create_directories(dir_);
  const auto tmp = dir_ / (key + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
  }
  std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

}  // namespace spernerlab
