#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pkostka::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pkostka command") {
  const auto r = run({"pkostka", "--p", "2", "--lambda", "4,2", "--mu", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"multiplicity\":1,\"kind\":\"exact\",\"trace\":[\"two-part\"]}\n");
  const auto t = run({"--format", "text", "pkostka", "--p", "2", "--lambda", "2,1,1", "--mu", "3,1"});
  CHECK(t.code == 0);
  CHECK(t.out.find(": 1 (exact)") != std::string::npos);
}

TEST_CASE("indec command") {
  const auto r = run({"indec", "--p", "2", "--degree", "126"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"p\":2,\"r\":126,\"indecomposable\":[[126],[125,1],[123,3],[119,7],[111,15],[95,31],[63,63]]}\n");
  const auto l = run({"indec", "--p", "3", "--lambda", "5,1"});
  CHECK(l.code == 0);
  CHECK(l.out.find("\"indecomposable\":true") != std::string::npos);
}

TEST_CASE("oracle commands") {
  const auto r = run({"oracle", "decompose", "--p", "2", "--lambda", "2,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"version\":1,\"p\":2,\"r\":4,\"lambda\":[2,1,1],\"summands\":[{\"mu\":[3,1],\"dim\":4,\"mult\":1},"
        "{\"mu\":[2,1,1],\"dim\":8,\"mult\":1}]}\n");
  const auto t = run({"--format", "text", "oracle", "table", "--p", "3", "--degree", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("M^(1,1,1) =") != std::string::npos);
  const auto big = run({"oracle", "decompose", "--p", "2", "--lambda", "1,1,1,1,1,1,1,1"});
  CHECK(big.code == 2);
}

TEST_CASE("character command") {
  const auto r = run({"--format", "text", "character", "--lambda", "6,2", "--blocks", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chi^(8) + chi^(7,1) + chi^(6,2)") != std::string::npos);
}

TEST_CASE("input errors name the offending token") {
  auto failing = [](std::vector<std::string> args, const std::string& token) {
    const auto r = run(std::move(args));
    CHECK(r.code == 1);
    CHECK(r.err.find(token) != std::string::npos);
  };
  failing({"pkostka", "--p", "4", "--lambda", "4,2", "--mu", "6"}, "'4'");
  failing({"pkostka", "--p", "2", "--lambda", "2,4", "--mu", "6"}, "'4'");
  failing({"pkostka", "--p", "2", "--lambda", "4,x", "--mu", "6"}, "'x'");
  failing({"pkostka", "--p", "2", "--lambda", "4,2", "--mu", "5"}, "'5'");
  failing({"indec", "--p", "2", "--degree", "ten"}, "'ten'");
  failing({"verify", "nonsense"}, "'nonsense'");
  failing({"frobnicate"}, "'frobnicate'");
  CHECK(run({"pkostka", "--p", "2"}).code == 1);
  CHECK(run({"--compose", "pkostka", "--p", "2", "--lambda", "2,4", "--mu", "6"}).code == 0);
}

TEST_CASE("budget exhaustion is exit code 2") {
  const auto r = run({"pkostka", "--p", "2", "--lambda", "1,1,1,1,1,1,1,1", "--mu", "2,1,1,1,1,1,1", "--budget", "100"});
  CHECK(r.code == 2);
  CHECK(r.out.find("unresolved") != std::string::npos);
}

TEST_CASE("output is deterministic and cached output is identical") {
  const fs::path dir = fs::temp_directory_path() / ("pkostka_cli_cache_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const std::vector<std::string> args{"--cache-dir", dir.string(), "oracle", "table", "--p", "2", "--degree", "4"};
  const auto first = run(args);
  CHECK(first.code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);
  const auto second = run(args);
  CHECK(second.out == first.out);
  const auto uncached = run({"oracle", "table", "--p", "2", "--degree", "4"});
  CHECK(uncached.out == first.out);
  fs::remove_all(dir);
}

TEST_CASE("verify command") {
  const auto r = run({"--format", "text", "verify", "indecomposable-126"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}
