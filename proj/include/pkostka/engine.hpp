#pragma once

// Reduction rules for p-Kostka numbers [M^lambda : Y^mu] and the recursion
// through Brauer quotients, with the decomposition oracle as base case.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pkostka/oracle.hpp"
#include "pkostka/partition.hpp"

namespace pkostka {

/// Values 0 <= v < p; C(n, k) mod p by Lucas' theorem (0 when k > n).
int binomial_mod_p(std::int64_t n, std::int64_t k, int p);

/// [M^(r-j,j) : Y^(r-s,s)] for 0 <= s <= j <= r/2; throws otherwise.
int two_part_pkostka(int r, int j, int s, int p);

/// (lambda/p, mu/p) when both are divisible by p.
std::optional<std::pair<Partition, Partition>> divide_by_p_reduction(const Partition& lambda, const Partition& mu, int p);

/// 0 when p divides r, lambda is not divisible by p and mu is.
std::optional<int> vanishing_rule(const Partition& lambda, const Partition& mu, int p);

struct FirstRowReduction {
  Partition lambda;
  Partition mu;
  int n = 0;
  int a = 0;
  /// Which hypothesis certified the step: "top-level" (p^n > max(p^s, lambda_2))
  /// or "henke" (lambda_1 >= r/2 and lambda_2 < p^n).
  std::string certificate;
};

/// Writes Lambda = lambda + (a p^n), Mu = mu + (a p^n) with the largest a p^n
/// (ties to the largest n) such that the multiplicity is unchanged.
std::optional<FirstRowReduction> first_row_reduction(const Partition& Lambda, const Partition& Mu, int p);

/// c[i][j] with sum_i c[i][j] p^i = lambda_j and sum_j c[i][j] = levels[i].
struct RefinementMatrix {
  int p = 2;
  std::vector<std::vector<int>> c;

  Composition level(std::size_t i) const { return Composition(c.at(i)); }
  friend bool operator==(const RefinementMatrix&, const RefinementMatrix&) = default;
};

/// All refinement matrices, in descending lexicographic order of their
/// row-major entries. Throws if sum levels[i] p^i != |lambda|.
std::vector<RefinementMatrix> enumerate_refinements(const Partition& lambda, const std::vector<int>& levels, int p);

enum class ResultKind { exact, lower_bound, zero_by_rule, unresolved };

std::string to_string(ResultKind kind);

struct ReductionStep {
  std::string rule;
  Partition lambda;
  Partition mu;
  /// Sub-queries this step reduced to, in evaluation order.
  std::vector<std::pair<Partition, Partition>> to;
  std::optional<std::int64_t> value;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct PKostkaResult {
  ResultKind kind = ResultKind::unresolved;
  std::optional<std::int64_t> value;
  /// Pre-order record of every rule application in the evaluation tree.
  std::vector<ReductionStep> trace;

  bool resolved() const noexcept { return kind != ResultKind::unresolved; }
  /// Rule names of the trace, in order.
  std::vector<std::string> rules() const;
};

struct EngineOptions {
  /// Oracle tabloid budget.
  std::size_t budget = 3000;
  std::size_t end_budget = 1000;
  std::uint64_t seed = OracleOptions{}.seed;
  /// Rule names to skip; "oracle" cannot be disabled.
  std::set<std::string> disabled;
};

/// Memoizing evaluator for one prime. Safe to share between threads; the
/// memo lock is never held across recursive calls.
class Engine {
 public:
  explicit Engine(int p, EngineOptions options = {}, std::shared_ptr<YoungOracle> oracle = nullptr);

  int prime() const noexcept { return p_; }
  YoungOracle& oracle() { return *oracle_; }

  PKostkaResult pkostka(const Partition& lambda, const Partition& mu);
  /// The refinement sum alone (mu not p-restricted) or the oracle (mu
  /// p-restricted); factors use the full rule set.
  PKostkaResult klyachko(const Partition& lambda, const Partition& mu);
  /// Bound [M^lambda:Y^mu][M^alpha:Y^delta] for [M^(lambda+p^n alpha) : Y^(mu+p^n delta)];
  /// exact when p^n > lambda_1. Throws if n <= s, the top p-adic level of mu.
  PKostkaResult split_bound(const Partition& lambda, const Partition& alpha, const Partition& mu,
                            const Partition& delta, int n);

 private:
  PKostkaResult evaluate(const Partition& lambda, const Partition& mu);
  PKostkaResult klyachko_sum(const Partition& lambda, const Partition& mu);
  PKostkaResult from_oracle(const Partition& lambda, const Partition& mu);
  bool enabled(const std::string& rule) const { return !options_.disabled.count(rule); }

  int p_;
  EngineOptions options_;
  std::shared_ptr<YoungOracle> oracle_;
  std::mutex memo_mutex_;
  std::map<std::pair<Partition, Partition>, PKostkaResult> memo_;
};

}  // namespace pkostka
