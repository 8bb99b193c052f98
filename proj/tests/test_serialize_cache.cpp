#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "pkostka/cache.hpp"
#include "pkostka/serialize.hpp"

using namespace pkostka;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pkostka_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("partition and character JSON") {
  CHECK(to_json(Partition{4, 2}).dump() == "[4,2]");
  CHECK(to_json(Partition{}).dump() == "[]");
  CHECK(partition_from_json(Json::parse("[3,1,1]")) == Partition{3, 1, 1});
  CHECK_THROWS(partition_from_json(Json::parse("[1,3]")));
  CharacterVector v;
  v.add(Partition{2, 1}, 1);
  v.add(Partition{3}, 1);
  CHECK(to_json(v).dump() == R"([{"partition":[3],"mult":1},{"partition":[2,1],"mult":1}])");
}

TEST_CASE("result JSON") {
  PKostkaResult r;
  r.kind = ResultKind::exact;
  r.value = 1;
  r.trace.push_back({"two-part", Partition{4, 2}, Partition{6}, {}, 1});
  CHECK(to_json(r).dump() == R"({"multiplicity":1,"kind":"exact","trace":["two-part"]})");
  const Json full = to_json(r, true);
  CHECK(full["steps"][0]["rule"] == "two-part");
  CHECK(full["steps"][0]["from"].dump() == "[[4,2],[6]]");
  PKostkaResult u;
  CHECK(to_json(u).dump() == R"({"multiplicity":null,"kind":"unresolved","trace":[]})");
}

TEST_CASE("label tables round-trip") {
  YoungOracle o(2);
  const LabelTable t = o.table(4);
  const Json j = to_json(t);
  CHECK(j["version"] == kFormatVersion);
  const LabelTable back = label_table_from_json(j);
  CHECK(to_json(back).dump() == j.dump());
  for (const auto& row : t.rows)
    for (const auto& e : row.summands) CHECK(back.multiplicity(row.lambda, e.label) == e.multiplicity);
}

TEST_CASE("atomic writes replace files whole") {
  const fs::path dir = fresh_dir("atomic");
  fs::create_directories(dir);
  write_atomically(dir / "a.json", "first");
  write_atomically(dir / "a.json", "second");
  std::ifstream in(dir / "a.json");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "second");
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);
  fs::remove_all(dir);
}

TEST_CASE("cache round-trip") {
  const fs::path dir = fresh_dir("roundtrip");
  std::ostringstream warnings;
  ResultCache cache(dir, &warnings);
  REQUIRE(cache.enabled());
  YoungOracle o(2);
  const Json value = to_json(o.table(4));
  const std::string key = cache_key("table", 2, {"4"});
  CHECK_FALSE(cache.load(key, 1).has_value());
  const CacheEntry stored = cache.store(key, 1, value);
  const auto loaded = cache.load(key, 1);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == stored);
  CHECK(loaded->value.dump() == value.dump());
  CHECK_FALSE(cache.load(key, 2).has_value());
  CHECK(warnings.str().empty());

  // a different engine version ignores the entry
  ResultCache newer(dir, &warnings, "9.9.9");
  CHECK_FALSE(newer.load(key, 1).has_value());

  // corruption is reported and ignored
  {
    std::ofstream(cache.path_for(key), std::ios::trunc) << "{not json";
  }
  CHECK_FALSE(cache.load(key, 1).has_value());
  CHECK(warnings.str().find("ignoring") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("unusable cache directories disable the cache") {
  const fs::path file = fresh_dir("file");
  std::ofstream(file) << "x";
  std::ostringstream warnings;
  ResultCache cache(file / "sub", &warnings);
  CHECK_FALSE(cache.enabled());
  CHECK_FALSE(warnings.str().empty());
  CHECK_NOTHROW(cache.store("k", 0, Json(1)));
  CHECK_FALSE(cache.load("k", 0).has_value());
  fs::remove(file);
}

TEST_CASE("flag beats environment") {
  const fs::path env = fresh_dir("env"), flag = fresh_dir("flag");
  ::setenv(kCacheEnvVar, env.c_str(), 1);
  std::ostringstream warnings;
  CHECK(ResultCache::from_settings(std::nullopt, &warnings).directory() == env);
  CHECK(ResultCache::from_settings(flag.string(), &warnings).directory() == flag);
  ::unsetenv(kCacheEnvVar);
  CHECK_FALSE(ResultCache::from_settings(std::nullopt, &warnings).enabled());
  fs::remove_all(env);
  fs::remove_all(flag);
}

TEST_CASE("cache keys") {
  CHECK(cache_key("pkostka", 2, {"4,2", "6"}) != cache_key("pkostka", 3, {"4,2", "6"}));
  CHECK(cache_key("pkostka", 2, {"4,2", "6"}) == cache_key("pkostka", 2, {"4,2", "6"}));
}
