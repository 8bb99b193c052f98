#include "pkostka/engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pkostka/gf.hpp"

namespace pkostka {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

int small_binomial_mod(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  gf::Scalar num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num = num * (n - i) % p;
    den = den * (i + 1) % p;
  }
  return static_cast<int>(num * gf::inverse(den, p) % p);
}

bool at_most_two_parts(const Partition& lambda) { return lambda.length() <= 2; }

}  // namespace

int binomial_mod_p(std::int64_t n, std::int64_t k, int p) {
  if (n < 0 || k < 0 || k > n) return 0;
  int out = 1;
  while (n > 0 || k > 0) {
    out = out * small_binomial_mod(static_cast<int>(n % p), static_cast<int>(k % p), p) % p;
    if (!out) return 0;
    n /= p;
    k /= p;
  }
  return out;
}

int two_part_pkostka(int r, int j, int s, int p) {
  if (s < 0 || s > j || 2 * j > r) throw std::invalid_argument("two_part_pkostka: need 0 <= s <= j <= r/2");
  return binomial_mod_p(r - 2 * s, j - s, p) != 0 ? 1 : 0;
}

std::optional<std::pair<Partition, Partition>> divide_by_p_reduction(const Partition& lambda, const Partition& mu, int p) {
  auto l = divide(lambda, p), m = divide(mu, p);
  if (!l || !m) return std::nullopt;
  return std::make_pair(*l, *m);
}

std::optional<int> vanishing_rule(const Partition& lambda, const Partition& mu, int p) {
  if (lambda.degree() % p != 0) return std::nullopt;
  if (!divisible_by(lambda, p) && divisible_by(mu, p)) return 0;
  return std::nullopt;
}

std::optional<FirstRowReduction> first_row_reduction(const Partition& Lambda, const Partition& Mu, int p) {
  if (Lambda.degree() != Mu.degree()) throw std::invalid_argument("first_row_reduction: degree mismatch");
  if (Lambda.length() <= 1) return std::nullopt;
  std::optional<FirstRowReduction> best;
  std::int64_t best_amount = 0;
  const int slack = std::min(Lambda[0] - Lambda[1], Mu[0] - Mu[1]);
  for (int n = 0; ipow(p, n) <= slack; ++n) {
    const std::int64_t q = ipow(p, n);
    for (std::int64_t a = 1; a * q <= slack; ++a) {
      std::vector<int> l = Lambda.parts(), m = Mu.parts();
      l[0] -= static_cast<int>(a * q);
      m[0] -= static_cast<int>(a * q);
      const Partition lambda(l), mu(m);
      const int s = p_adic_expansion(mu, p).top_level();
      const int r = lambda.degree();
      std::string certificate;
      if (n > s && q > lambda[1])
        certificate = "top-level";
      else if (2 * lambda[0] >= r && lambda[1] < q)
        certificate = "henke";
      else
        continue;
      if (a * q > best_amount || (a * q == best_amount && n > best->n)) {
        best_amount = a * q;
        best = FirstRowReduction{lambda, mu, n, static_cast<int>(a), certificate};
      }
    }
  }
  return best;
}

std::vector<RefinementMatrix> enumerate_refinements(const Partition& lambda, const std::vector<int>& levels, int p) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) total += levels[i] * ipow(p, static_cast<int>(i));
  if (total != lambda.degree()) throw std::invalid_argument("enumerate_refinements: levels do not match |lambda|");
  const std::size_t rows = levels.size();
  const int cols = lambda.length();
  std::vector<RefinementMatrix> out;
  std::vector<std::vector<int>> c(rows, std::vector<int>(cols, 0));
  std::vector<int> room(levels);

  // fill column j from the top level down; level 0 takes the remainder
  std::function<void(int, int, int)> fill = [&](int j, int i, int left) {
    if (j == cols) {
      if (std::all_of(room.begin(), room.end(), [](int v) { return v == 0; })) out.push_back({p, c});
      return;
    }
    if (i == 0) {
      if (left > room[0]) return;
      c[0][j] = left;
      room[0] -= left;
      fill(j + 1, static_cast<int>(rows) - 1, j + 1 < cols ? lambda[j + 1] : 0);
      room[0] += left;
      c[0][j] = 0;
      return;
    }
    const std::int64_t q = ipow(p, i);
    for (int v = 0; v <= room[i] && v * q <= left; ++v) {
      c[i][j] = v;
      room[i] -= v;
      fill(j, i - 1, left - static_cast<int>(v * q));
      room[i] += v;
    }
    c[i][j] = 0;
  };
  if (rows == 0) {
    if (cols == 0) out.push_back({p, {}});
    return out;
  }
  fill(0, static_cast<int>(rows) - 1, cols ? lambda[0] : 0);
  std::sort(out.begin(), out.end(), [](const RefinementMatrix& a, const RefinementMatrix& b) { return a.c > b.c; });
  return out;
}

std::string to_string(ResultKind kind) {
  switch (kind) {
    case ResultKind::exact: return "exact";
    case ResultKind::lower_bound: return "lower_bound";
    case ResultKind::zero_by_rule: return "zero_by_rule";
    case ResultKind::unresolved: return "unresolved";
  }
  return "unresolved";
}

std::vector<std::string> PKostkaResult::rules() const {
  std::vector<std::string> out;
  for (const auto& step : trace) out.push_back(step.rule);
  return out;
}

Engine::Engine(int p, EngineOptions options, std::shared_ptr<YoungOracle> oracle)
    : p_(p), options_(std::move(options)), oracle_(std::move(oracle)) {
  if (!is_prime(p)) throw std::invalid_argument("Engine: " + std::to_string(p) + " is not prime");
  if (!oracle_) {
    OracleOptions o;
    o.tabloid_budget = options_.budget;
    o.end_budget = options_.end_budget;
    o.seed = options_.seed;
    oracle_ = std::make_shared<YoungOracle>(p, o);
  }
  if (oracle_->prime() != p) throw std::invalid_argument("Engine: oracle prime differs");
}

PKostkaResult Engine::pkostka(const Partition& lambda, const Partition& mu) {
  if (lambda.degree() != mu.degree()) throw std::invalid_argument("pkostka: degree mismatch");
  const auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  PKostkaResult result = evaluate(lambda, mu);
  std::lock_guard lock(memo_mutex_);
  return memo_.emplace(key, std::move(result)).first->second;
}

namespace {

PKostkaResult leaf(const std::string& rule, const Partition& lambda, const Partition& mu, std::int64_t value) {
  PKostkaResult out;
  out.kind = ResultKind::exact;
  out.value = value;
  out.trace.push_back({rule, lambda, mu, {}, value});
  return out;
}

PKostkaResult forward(const std::string& rule, const Partition& lambda, const Partition& mu, const Partition& l2,
                      const Partition& m2, PKostkaResult sub) {
  PKostkaResult out;
  out.kind = sub.kind;
  out.value = sub.value;
  out.trace.push_back({rule, lambda, mu, {{l2, m2}}, sub.value});
  out.trace.insert(out.trace.end(), sub.trace.begin(), sub.trace.end());
  return out;
}

}  // namespace

PKostkaResult Engine::evaluate(const Partition& lambda, const Partition& mu) {
  if (enabled("dominance") && !dominates(mu, lambda)) return leaf("dominance", lambda, mu, 0);
  if (enabled("identity") && lambda == mu) return leaf("identity", lambda, mu, 1);
  if (enabled("two-part") && at_most_two_parts(lambda) && at_most_two_parts(mu) && dominates(mu, lambda))
    return leaf("two-part", lambda, mu, two_part_pkostka(lambda.degree(), lambda[1], mu[1], p_));
  if (enabled("vanishing"))
    if (auto v = vanishing_rule(lambda, mu, p_)) return leaf("vanishing", lambda, mu, *v);
  if (enabled("divide-by-p"))
    if (auto red = divide_by_p_reduction(lambda, mu, p_))
      return forward("divide-by-p", lambda, mu, red->first, red->second, pkostka(red->first, red->second));
  if (enabled("strip-first-row"))
    if (auto red = first_row_reduction(lambda, mu, p_))
      return forward("strip-first-row", lambda, mu, red->lambda, red->mu, pkostka(red->lambda, red->mu));
  if (enabled("klyachko") && !is_p_restricted(mu, p_)) return klyachko_sum(lambda, mu);
  return from_oracle(lambda, mu);
}

PKostkaResult Engine::from_oracle(const Partition& lambda, const Partition& mu) {
  PKostkaResult out;
  const auto v = oracle_->try_multiplicity(lambda, mu);
  if (v) {
    out.kind = ResultKind::exact;
    out.value = *v;
  }
  out.trace.push_back({"oracle", lambda, mu, {}, out.value});
  return out;
}

PKostkaResult Engine::klyachko(const Partition& lambda, const Partition& mu) {
  if (lambda.degree() != mu.degree()) throw std::invalid_argument("klyachko: degree mismatch");
  if (is_p_restricted(mu, p_)) return from_oracle(lambda, mu);
  return klyachko_sum(lambda, mu);
}

PKostkaResult Engine::klyachko_sum(const Partition& lambda, const Partition& mu) {
  const PAdicExpansion expansion = p_adic_expansion(mu, p_);
  const std::vector<int> levels = expansion.level_degrees();
  ReductionStep step{"klyachko", lambda, mu, {}, std::nullopt};
  std::vector<ReductionStep> subtrace;
  std::int64_t total = 0;
  bool unresolved = false;
  for (const auto& gamma : enumerate_refinements(lambda, levels, p_)) {
    std::int64_t term = 1;
    bool term_unresolved = false;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i] == 0) continue;
      const Partition source = sort_to_partition(gamma.level(i));
      step.to.emplace_back(source, expansion.digits[i]);
      PKostkaResult factor = pkostka(source, expansion.digits[i]);
      subtrace.insert(subtrace.end(), factor.trace.begin(), factor.trace.end());
      if (!factor.resolved()) {
        term_unresolved = true;
        continue;
      }
      term *= *factor.value;
      if (term == 0) break;
    }
    if (term == 0) continue;
    if (term_unresolved)
      unresolved = true;
    else
      total += term;
  }
  PKostkaResult out;
  if (!unresolved) {
    out.kind = ResultKind::exact;
    out.value = total;
    step.value = total;
  }
  out.trace.push_back(std::move(step));
  out.trace.insert(out.trace.end(), subtrace.begin(), subtrace.end());
  return out;
}

PKostkaResult Engine::split_bound(const Partition& lambda, const Partition& alpha, const Partition& mu,
                                  const Partition& delta, int n) {
  if (lambda.degree() != mu.degree() || alpha.degree() != delta.degree())
    throw std::invalid_argument("split_bound: degree mismatch");
  const int s = p_adic_expansion(mu, p_).top_level();
  if (n <= s) throw std::invalid_argument("split_bound: need n > " + std::to_string(s));
  const PKostkaResult first = pkostka(lambda, mu);
  const PKostkaResult second = pkostka(alpha, delta);
  const std::int64_t q = ipow(p_, n);
  const Partition big_lambda = pointwise_add(lambda, scale(static_cast<int>(q), alpha));
  const Partition big_mu = pointwise_add(mu, scale(static_cast<int>(q), delta));
  PKostkaResult out;
  if (first.resolved() && second.resolved()) {
    out.value = *first.value * *second.value;
    out.kind = q > lambda[0] ? ResultKind::exact : ResultKind::lower_bound;
  }
  out.trace.push_back({"split-bound", big_lambda, big_mu, {{lambda, mu}, {alpha, delta}}, out.value});
  out.trace.insert(out.trace.end(), first.trace.begin(), first.trace.end());
  out.trace.insert(out.trace.end(), second.trace.begin(), second.trace.end());
  return out;
}

}  // namespace pkostka
