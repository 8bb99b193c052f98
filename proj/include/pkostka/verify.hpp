#pragma once

// Named self-check suites shared by the command-line tool and the
// acceptance runner.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pkostka/engine.hpp"
#include "pkostka/oracle.hpp"

namespace pkostka {

struct SuiteReport {
  std::string name;
  std::string description;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  /// Counts one case; records `what` as a failure unless ok.
  void check(bool ok, const std::string& what);
};

/// Oracles and engines shared across suites, one per prime.
class VerifyContext {
 public:
  explicit VerifyContext(std::uint64_t seed = OracleOptions{}.seed) : seed_(seed) {}
  YoungOracle& oracle(int p);
  /// A second oracle with reversed Hom bases and a different seed.
  YoungOracle& independent_oracle(int p);
  Engine& engine(int p);

 private:
  std::uint64_t seed_;
  std::map<int, std::shared_ptr<YoungOracle>> oracles_, independent_;
  std::map<int, std::unique_ptr<Engine>> engines_;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

const std::vector<SuiteInfo>& suites();

/// Runs a suite by name; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, VerifyContext& context);

}  // namespace pkostka
