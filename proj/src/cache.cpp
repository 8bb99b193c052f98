#include "pkostka/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pkostka {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

Json to_json(const CacheEntry& entry) {
  return {{"key", entry.key}, {"version", entry.version}, {"seed", entry.seed}, {"timestamp", entry.timestamp}, {"value", entry.value}};
}

CacheEntry cache_entry_from_json(const Json& j) {
  return {j.at("key").get<std::string>(), j.at("version").get<std::string>(), j.at("seed").get<std::uint64_t>(),
          j.at("timestamp").get<std::string>(), j.at("value")};
}

ResultCache::ResultCache(const std::filesystem::path& dir, std::ostream* warnings, std::string version)
    : warnings_(warnings), version_(std::move(version)) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    warn("cache directory " + dir.string() + " is unusable; caching disabled");
    return;
  }
  // probe writability
  const auto probe = dir / (".probe." + std::to_string(fnv1a(dir.string())));
  {
    std::ofstream out(probe);
    if (!out) {
      warn("cache directory " + dir.string() + " is not writable; caching disabled");
      return;
    }
  }
  std::filesystem::remove(probe, ec);
  dir_ = dir;
}

ResultCache ResultCache::from_settings(const std::optional<std::string>& flag, std::ostream* warnings) {
  if (flag && !flag->empty()) return ResultCache(*flag, warnings);
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return ResultCache(env, warnings);
  return ResultCache();
}

void ResultCache::warn(const std::string& message) const {
  if (warnings_) *warnings_ << "warning: " << message << "\n";
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  return dir_.value_or(".") / name.str();
}

std::optional<CacheEntry> ResultCache::load(const std::string& key, std::uint64_t seed) const {
  if (!dir_) return std::nullopt;
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    std::ostringstream text;
    text << in.rdbuf();
    CacheEntry entry = cache_entry_from_json(Json::parse(text.str()));
    if (entry.key != key || entry.version != version_ || entry.seed != seed) return std::nullopt;
    return entry;
  } catch (const std::exception& e) {
    warn("ignoring corrupted cache file " + path.string() + " (" + e.what() + ")");
    return std::nullopt;
  }
}

CacheEntry ResultCache::store(const std::string& key, std::uint64_t seed, const Json& value) const {
  CacheEntry entry{key, version_, seed, utc_now(), value};
  store(entry);
  return entry;
}

void ResultCache::store(const CacheEntry& entry) const {
  if (!dir_) return;
  try {
    write_atomically(path_for(entry.key), to_json(entry).dump());
  } catch (const std::exception& e) {
    warn(std::string("cache write failed: ") + e.what());
  }
}

std::string cache_key(const std::string& kind, int p, const std::vector<std::string>& args) {
  std::string out = kind + "|p=" + std::to_string(p);
  for (const auto& a : args) out += "|" + a;
  return out;
}

}  // namespace pkostka
