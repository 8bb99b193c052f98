#include "pkostka/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pkostka/character.hpp"
#include "pkostka/indecomposability.hpp"

namespace pkostka {

void SuiteReport::check(bool ok, const std::string& what) {
  ++cases;
  if (!ok) {
    passed = false;
    if (failures.size() < 20) failures.push_back(what);
  }
}

YoungOracle& VerifyContext::oracle(int p) {
  auto& slot = oracles_[p];
  if (!slot) {
    OracleOptions o;
    o.seed = seed_;
    slot = std::make_shared<YoungOracle>(p, o);
  }
  return *slot;
}

YoungOracle& VerifyContext::independent_oracle(int p) {
  auto& slot = independent_[p];
  if (!slot) {
    OracleOptions o;
    o.seed = seed_ ^ 0x5bd1e995u;
    o.reverse_basis = true;
    slot = std::make_shared<YoungOracle>(p, o);
  }
  return *slot;
}

Engine& VerifyContext::engine(int p) {
  auto& slot = engines_[p];
  if (!slot) {
    EngineOptions e;
    e.seed = seed_;
    oracle(p);
    slot = std::make_unique<Engine>(p, e, oracles_[p]);
  }
  return *slot;
}

namespace {

std::string show(const Partition& l) { return "(" + l.to_string() + ")"; }

std::string show(const std::vector<Partition>& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? " " : "") + show(ls[i]);
  return out + "}";
}

// Indecomposable list from the two-part verdicts, one j at a time.
std::vector<Partition> two_part_scan(int r) {
  std::vector<Partition> out{Partition{r}};
  for (int j = 1; 2 * j <= r; ++j)
    if (two_part_verdict(r, j).indecomposable) out.push_back(Partition{r - j, j});
  return out;
}

void indecomposable_126(SuiteReport& rep, VerifyContext&) {
  const std::vector<Partition> expected{{126}, {125, 1}, {123, 3}, {119, 7}, {111, 15}, {95, 31}, {63, 63}};
  const auto got = indecomposable_partitions(126, 2);
  rep.check(got == expected, "closed form gave " + show(got));
  rep.check(two_part_scan(126) == expected, "two-part scan gave " + show(two_part_scan(126)));
}

void powers_of_two(SuiteReport& rep, VerifyContext&) {
  for (int n = 1; n <= 6; ++n) {
    const int r = 1 << n;
    std::vector<Partition> expected{Partition{r}};
    for (int i = 0; i <= n - 1; ++i) expected.push_back(Partition{r - (1 << i), 1 << i});
    const auto got = indecomposable_partitions(r, 2);
    rep.check(got == expected, "r=" + std::to_string(r) + ": " + show(got));
    rep.check(two_part_scan(r) == expected, "r=" + std::to_string(r) + " scan: " + show(two_part_scan(r)));
  }
}

void hook_r211(SuiteReport& rep, VerifyContext& ctx) {
  for (int r : {4, 6}) {
    const Partition lambda{r - 2, 1, 1};
    const auto rec = ctx.oracle(2).decompose(lambda);
    std::map<Partition, int> got;
    for (const auto& s : rec.summands) got[s.label] = s.multiplicity;
    const std::map<Partition, int> expected{{lambda, 1}, {Partition{r - 1, 1}, 1}};
    std::string desc;
    for (const auto& [mu, m] : got) desc += " " + show(mu) + "x" + std::to_string(m);
    rep.check(got == expected, "M" + show(lambda) + " =" + desc);
  }
}

void multiply_by_p(SuiteReport& rep, VerifyContext& ctx) {
  const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {3, 2}};
  for (auto [p, r] : cases) {
    YoungOracle& o = ctx.oracle(p);
    for (const auto& lambda : partitions_of(r))
      for (const auto& mu : partitions_of(r)) {
        const int small = o.multiplicity(lambda, mu);
        const int big = o.multiplicity(scale(p, lambda), scale(p, mu));
        rep.check(small == big, "p=" + std::to_string(p) + " " + show(lambda) + "," + show(mu) + ": " +
                                    std::to_string(small) + " vs " + std::to_string(big));
      }
  }
}

void adding_p_power(SuiteReport& rep, VerifyContext&) {
  const int p = 2;
  for (int r = 2; r <= 20; r += 2)
    for (int j = 0; 2 * j <= r; ++j)
      for (int s = 0; s <= j; ++s) {
        const Partition mu = s ? Partition{r - s, s} : Partition{r};
        const int top = p_adic_expansion(mu, p).top_level();
        for (int n = 0; n <= 6; ++n) {
          if ((1 << n) <= std::max(1 << top, j)) continue;
          for (int a = 1; a <= 3; ++a) {
            const int shift = a << n;
            const int before = two_part_pkostka(r, j, s, p);
            const int after = two_part_pkostka(r + shift, j, s, p);
            rep.check(before == after, "r=" + std::to_string(r) + " j=" + std::to_string(j) + " s=" + std::to_string(s) +
                                           " n=" + std::to_string(n) + " a=" + std::to_string(a));
          }
        }
      }
  if (rep.cases < 1000) rep.check(false, "only " + std::to_string(rep.cases) + " admissible cases");
}

void split_bound_suite(SuiteReport& rep, VerifyContext& ctx) {
  const int p = 2;
  YoungOracle& o = ctx.oracle(p);
  const Partition one{1};
  for (int n : {2, 1}) {
    const int q = 1 << n;
    for (const auto& lambda : partitions_of(3))
      for (const auto& mu : partitions_of(3)) {
        if (n <= p_adic_expansion(mu, p).top_level()) continue;
        const Partition big_lambda = pointwise_add(lambda, scale(q, one));
        const Partition big_mu = pointwise_add(mu, scale(q, one));
        if (!o.within_budget(big_lambda)) continue;
        const int bound = o.multiplicity(lambda, mu) * o.multiplicity(one, one);
        const int value = o.multiplicity(big_lambda, big_mu);
        const std::string what = "n=" + std::to_string(n) + " " + show(big_lambda) + "," + show(big_mu) + ": value " +
                                 std::to_string(value) + " bound " + std::to_string(bound);
        if (q > lambda[0])
          rep.check(value == bound, what);
        else
          rep.check(value >= bound, what);
        const auto engine = ctx.engine(p).split_bound(lambda, one, mu, one, n);
        const auto kind = q > lambda[0] ? ResultKind::exact : ResultKind::lower_bound;
        rep.check(engine.kind == kind && engine.value == std::optional<std::int64_t>(bound), "engine bound for " + what);
      }
  }
}

void refinement_formula(SuiteReport& rep, VerifyContext& ctx) {
  const int p = 2;
  Engine& engine = ctx.engine(p);
  YoungOracle& o = ctx.independent_oracle(p);
  for (int r = 1; r <= 6; ++r)
    for (const auto& lambda : partitions_of(r))
      for (const auto& mu : partitions_of(r)) {
        const auto res = engine.pkostka(lambda, mu);
        const int truth = o.multiplicity(lambda, mu);
        rep.check(res.kind == ResultKind::exact && res.value && *res.value == truth,
                  show(lambda) + "," + show(mu) + ": engine " + (res.value ? std::to_string(*res.value) : "?") +
                      " oracle " + std::to_string(truth));
      }
}

void vanishing(SuiteReport& rep, VerifyContext& ctx) {
  const int p = 2;
  for (int r : {4, 6})
    for (const auto& lambda : partitions_of(r))
      for (const auto& mu : partitions_of(r)) {
        if (divisible_by(lambda, p) || !divisible_by(mu, p)) continue;
        const int m = ctx.oracle(p).multiplicity(lambda, mu);
        rep.check(m == 0, show(lambda) + "," + show(mu) + ": " + std::to_string(m));
        rep.check(vanishing_rule(lambda, mu, p) == std::optional<int>(0), "rule not applicable to " + show(lambda));
      }
}

void classification(SuiteReport& rep, VerifyContext& ctx) {
  for (int p : {2, 3, 5})
    for (int r = 1; r <= 6; ++r)
      for (const auto& lambda : partitions_of(r)) {
        int count = 0;
        for (const auto& s : ctx.oracle(p).decompose(lambda).summands) count += s.multiplicity;
        const bool closed = is_indecomposable(lambda, p).indecomposable;
        rep.check(closed == (count == 1), "p=" + std::to_string(p) + " " + show(lambda) + ": " +
                                              std::to_string(count) + " summands");
      }
  for (int p : {2, 3})
    for (int r = 1; r <= 10; ++r)
      for (const auto& lambda : partitions_of(r))
        rep.check(has_nonprincipal_summand(lambda, p) == spans_multiple_blocks(lambda, p),
                  "blocks p=" + std::to_string(p) + " " + show(lambda));
}

// All digit lists of p-restricted partitions summing to lambda.
int count_expansions(const Partition& lambda, int p) {
  const int r = lambda.degree();
  int levels = 1;
  while (static_cast<long>(std::pow(p, levels)) <= r) ++levels;
  int count = 0;
  std::vector<int> acc(lambda.length(), 0);
  std::function<void(int, int)> go = [&](int level, int remaining) {
    if (level == levels) {
      if (remaining == 0 && acc == lambda.parts()) ++count;
      return;
    }
    const int q = static_cast<int>(std::pow(p, level));
    for (int d = 0; d * q <= remaining; ++d)
      for (const auto& digit : partitions_of(d)) {
        if (!is_p_restricted(digit, p) || digit.length() > lambda.length()) continue;
        for (int k = 0; k < digit.length(); ++k) acc[k] += q * digit[k];
        go(level + 1, remaining - d * q);
        for (int k = 0; k < digit.length(); ++k) acc[k] -= q * digit[k];
      }
  };
  go(0, r);
  return count;
}

void properties(SuiteReport& rep, VerifyContext&) {
  for (int p : {2, 3})
    for (int r = 0; r <= 8; ++r)
      for (const auto& lambda : partitions_of(r)) {
        const auto e = p_adic_expansion(lambda, p);
        bool restricted = true;
        for (const auto& d : e.digits) restricted = restricted && is_p_restricted(d, p);
        rep.check(restricted && e.reconstruct() == lambda, "expansion of " + show(lambda));
        rep.check(count_expansions(lambda, p) == 1, "expansion not unique for " + show(lambda));
      }
  for (int r = 0; r <= 10; ++r) {
    const auto ps = partitions_of(r);
    for (const auto& lambda : ps) {
      Natural total = 0;
      for (const auto& mu : ps) total += hook_dimension(mu) * kostka_number(mu, lambda);
      rep.check(total == multinomial(lambda.as_composition()), "dimension identity for " + show(lambda));
    }
    bool axioms = true;
    for (const auto& a : ps) {
      axioms = axioms && dominates(a, a);
      for (const auto& b : ps) {
        if (a != b && dominates(a, b) && dominates(b, a)) axioms = false;
        if (!dominates(a, b)) continue;
        for (const auto& c : ps)
          if (dominates(b, c) && !dominates(a, c)) axioms = false;
      }
    }
    rep.check(axioms, "dominance axioms at r=" + std::to_string(r));
  }
  for (int r = 2; r <= 128; r += 2) {
    std::set<Partition> doubled, target;
    for (const auto& l : indecomposable_partitions(r, 2)) doubled.insert(scale(2, l));
    for (const auto& l : indecomposable_partitions(2 * r, 2))
      if (l != Partition{2 * r - 1, 1}) target.insert(l);
    rep.check(doubled == target, "doubling at r=" + std::to_string(r));
  }
  for (int r = 2; r <= 64; r += 2) {
    int n = 0;
    while ((2 << n) <= r) ++n;
    for (int k = n; k <= n + 2; ++k)
      for (int j = 0; 2 * j <= r; ++j) {
        const Partition a = j ? Partition{r - j, j} : Partition{r};
        const int m = r + (1 << k);
        const Partition b = j ? Partition{m - j, j} : Partition{m};
        rep.check(is_indecomposable(a, 2).indecomposable == is_indecomposable(b, 2).indecomposable,
                  "shift r=" + std::to_string(r) + " k=" + std::to_string(k) + " j=" + std::to_string(j));
      }
  }
}

using SuiteFn = void (*)(SuiteReport&, VerifyContext&);

const std::vector<std::pair<SuiteInfo, SuiteFn>>& registry() {
  static const std::vector<std::pair<SuiteInfo, SuiteFn>> table{
      {{"indecomposable-126", "indecomposable two-part list at r=126, p=2"}, indecomposable_126},
      {{"powers-of-two", "indecomposable lists at r=2^n, n=1..6, p=2"}, powers_of_two},
      {{"hook-r-2-1-1", "M^(r-2,1,1) = Y^(r-2,1,1) + Y^(r-1,1) at p=2, r=4,6"}, hook_r211},
      {{"multiply-by-p", "[M^(p lambda):Y^(p mu)] = [M^lambda:Y^mu], p=2 r<=3 and p=3 r=2"}, multiply_by_p},
      {{"adding-p-power", "two-part values unchanged by adding a 2^n to the first rows, even r<=20"}, adding_p_power},
      {{"split-bound", "[M^(lambda+2^n):Y^(mu+2^n)] against [M^lambda:Y^mu], lambda,mu |- 3"}, split_bound_suite},
      {{"refinement-formula", "reduction engine against the oracle, p=2, r<=6"}, refinement_formula},
      {{"vanishing", "[M^lambda:Y^mu] = 0 for lambda not even and mu even, p=2, r=4,6"}, vanishing},
      {{"classification", "closed-form indecomposability and block spread against the oracle"}, classification},
      {{"properties", "expansions, Young's rule dimensions, dominance, doubling and shifting"}, properties},
  };
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& [info, fn] : registry()) v.push_back(info);
    return v;
  }();
  return out;
}

SuiteReport run_suite(const std::string& name, VerifyContext& context) {
  for (const auto& [info, fn] : registry()) {
    if (info.name != name) continue;
    SuiteReport rep;
    rep.name = info.name;
    rep.description = info.description;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(rep, context);
    } catch (const std::exception& e) {
      rep.check(false, std::string("exception: ") + e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace pkostka
