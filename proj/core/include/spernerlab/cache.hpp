#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace spernerlab {

/// Artifact version folded into every cache key.
const char* version();

/// SPERNERLAB_CACHE_DIR if set, else $XDG_CACHE_HOME/spernerlab, else
/// ~/.cache/spernerlab, else ./.spernerlab-cache.
std::filesystem::path default_cache_dir();

/// 64-bit FNV-1a of the canonical (command, params, seed, version) tuple, as
/// 16 hex digits.
std::string cache_key(const std::string& command, const nlohmann::json& params, std::uint64_t seed);

/// Content-addressed result store: one file per key.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<std::string> load(const std::string& key) const;
  /// Writes through a temporary file and renames so readers never see a
  /// partial entry.
  void store(const std::string& key, const std::string& contents) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace spernerlab
