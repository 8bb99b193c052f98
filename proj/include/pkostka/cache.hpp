#pragma once

// On-disk cache of command results, one JSON file per key.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "pkostka/serialize.hpp"

namespace pkostka {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kCacheEnvVar = "PKOSTKA_CACHE_DIR";

struct CacheEntry {
  std::string key;
  std::string version;
  std::uint64_t seed = 0;
  std::string timestamp;
  Json value;

  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

Json to_json(const CacheEntry& entry);
CacheEntry cache_entry_from_json(const Json& j);

class ResultCache {
 public:
  /// Disabled cache.
  ResultCache() = default;
  /// Uses `dir`, creating it if needed. An unusable directory disables the
  /// cache with a warning on `warnings`.
  ResultCache(const std::filesystem::path& dir, std::ostream* warnings, std::string version = kEngineVersion);

  /// Directory from the flag if given, else from the environment; disabled if neither.
  static ResultCache from_settings(const std::optional<std::string>& flag, std::ostream* warnings);

  bool enabled() const noexcept { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  /// Entry for `key` if present, readable and made by this version with this seed.
  std::optional<CacheEntry> load(const std::string& key, std::uint64_t seed) const;
  /// Stores value under key with the current version and time; returns the entry.
  CacheEntry store(const std::string& key, std::uint64_t seed, const Json& value) const;
  void store(const CacheEntry& entry) const;

 private:
  void warn(const std::string& message) const;

  std::optional<std::filesystem::path> dir_;
  std::ostream* warnings_ = nullptr;
  std::string version_ = kEngineVersion;
};

/// "kind|p=P|arg|arg..." with arguments already normalized by the caller.
std::string cache_key(const std::string& kind, int p, const std::vector<std::string>& args);

}  // namespace pkostka
