#include <doctest.h>

#include <set>

#include "pkostka/partition.hpp"

using namespace pkostka;

TEST_CASE("construction strips trailing zeros and rejects increasing parts") {
  CHECK(Partition(std::vector<int>{3, 1, 0}) == Partition{3, 1});
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), std::invalid_argument);
  CHECK(Partition{}.to_string() == "-");
  CHECK(Partition{4, 2, 1}.to_string() == "4,2,1");
}

TEST_CASE("parsing") {
  CHECK(parse_partition("4,2,1") == Partition{4, 2, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("0") == Partition{});
  CHECK(parse_partition("-") == Partition{});
  CHECK_THROWS_WITH_AS(parse_partition("2,4"), doctest::Contains("'4'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_partition("4,a"), doctest::Contains("'a'"), std::invalid_argument);
  CHECK(parse_partition("2,4", true) == Partition{4, 2});
}

TEST_CASE("dominance examples") {
  CHECK(dominates(Partition{4, 2}, Partition{3, 3}));
  CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 2}));
  CHECK_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
  CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
}

TEST_CASE("dominance is a partial order for r <= 10") {
  for (int r = 0; r <= 10; ++r) {
    const auto ps = partitions_of(r);
    for (const auto& a : ps) {
      CHECK(dominates(a, a));
      for (const auto& b : ps) {
        if (a != b) CHECK_FALSE((dominates(a, b) && dominates(b, a)));
        if (!dominates(a, b)) continue;
        // dominance refines lexicographic order
        CHECK(a >= b);
        for (const auto& c : ps)
          if (dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{5}) == Partition{1, 1, 1, 1, 1});
  for (int r = 0; r <= 10; ++r)
    for (const auto& l : partitions_of(r)) {
      CHECK(conjugate(conjugate(l)) == l);
      // conjugation reverses dominance
      for (const auto& m : partitions_of(r)) CHECK(dominates(l, m) == dominates(conjugate(m), conjugate(l)));
    }
}

TEST_CASE("digits and valuations") {
  CHECK(p_digits(7, 3) == std::vector<int>{1, 2});
  CHECK(p_valuation(12, 2) == 2);
  CHECK(p_digits(126, 2) == std::vector<int>{0, 1, 1, 1, 1, 1, 1});
  CHECK(p_digits(0, 5).empty());
  for (int p : {2, 3, 5, 7})
    for (int m = 1; m < 500; ++m) {
      std::int64_t back = 0, q = 1;
      for (int d : p_digits(m, p)) {
        CHECK(d < p);
        back += d * q;
        q *= p;
      }
      CHECK(back == m);
      const int v = p_valuation(m, p);
      CHECK(m % static_cast<int>(std::pow(p, v)) == 0);
      CHECK(m % static_cast<int>(std::pow(p, v + 1)) != 0);
    }
}

TEST_CASE("p-adic expansions") {
  auto digits = [](const Partition& l, int p) { return p_adic_expansion(l, p).digits; };
  CHECK(digits(Partition{3, 2, 2}, 3) == std::vector<Partition>{{3, 2, 2}});
  CHECK(digits(Partition{4, 2}, 2) == std::vector<Partition>{{}, {2, 1}});
  CHECK(digits(Partition{5, 1}, 2) == std::vector<Partition>{{1, 1}, {}, {1}});
  CHECK(p_adic_expansion(Partition{}, 2).top_level() == -1);
  for (int p : {2, 3, 5})
    for (int r = 0; r <= 12; ++r)
      for (const auto& l : partitions_of(r)) {
        const auto e = p_adic_expansion(l, p);
        CHECK(e.reconstruct() == l);
        for (const auto& d : e.digits) CHECK(is_p_restricted(d, p));
        if (!e.digits.empty()) CHECK_FALSE(e.digits.back().empty());
      }
}

TEST_CASE("Young vertices") {
  CHECK(young_vertex(Partition{5, 1}, 2) == Partition{4, 1, 1});
  CHECK(young_vertex(Partition{4, 2}, 2) == Partition{2, 2, 2});
  for (int r = 1; r <= 8; ++r)
    for (const auto& l : partitions_of(r))
      if (is_p_restricted(l, 3)) CHECK(young_vertex(l, 3) == Partition(std::vector<int>(r, 1)));
}

TEST_CASE("cores and weights") {
  CHECK(p_core(Partition{3, 2, 1}, 2).core == Partition{3, 2, 1});
  CHECK(p_core(Partition{3, 2, 1}, 2).weight == 0);
  for (int r = 3; r <= 15; r += 2) CHECK(p_core(Partition{r - 1, 1}, 2).core == Partition{2, 1});
  CHECK(p_core(Partition{4, 2}, 2).core == Partition{});
  CHECK(p_core(Partition{4, 2}, 2).weight == 3);
  // the core does not depend on the order in which hooks are removed
  for (int p : {2, 3})
    for (int r = 0; r <= 10; ++r)
      for (const auto& l : partitions_of(r)) {
        const auto a = p_core(l, p, HookOrder::largest_first);
        const auto b = p_core(l, p, HookOrder::smallest_first);
        CHECK(a == b);
        CHECK(a.core.degree() + p * a.weight == r);
      }
}

TEST_CASE("hook dimensions and multinomials") {
  CHECK(hook_dimension(Partition{2, 1}) == 2);
  CHECK(hook_dimension(Partition{7}) == 1);
  CHECK(hook_dimension(Partition{1, 1, 1}) == 1);
  CHECK(multinomial(Composition{2, 1, 1}) == 12);
  // sum of (f^lambda)^2 is r!
  for (int r = 0; r <= 10; ++r) {
    Natural total = 0;
    for (const auto& l : partitions_of(r)) total += hook_dimension(l) * hook_dimension(l);
    CHECK(total == factorial(r));
  }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(10).size() == 42);
  // Euler's pentagonal recurrence as an independent count
  std::vector<long> count(31, 0);
  count[0] = 1;
  for (int n = 1; n <= 30; ++n)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long sign = (k % 2) ? 1 : -1;
      count[n] += sign * count[n - g1];
      if (g2 <= n) count[n] += sign * count[n - g2];
    }
  for (int n = 0; n <= 20; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == count[n]);
    CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
  }
}

TEST_CASE("arithmetic on partitions") {
  CHECK(sort_to_partition(Composition{0, 2, 1}) == Partition{2, 1});
  CHECK(sort_to_partition(Composition{1, 0, 0}) == Partition{1});
  CHECK(sort_to_partition(Composition{2, 2}) == Partition{2, 2});
  CHECK(pointwise_add(Partition{3, 2, 2}, Partition{3}) == Partition{6, 2, 2});
  CHECK(scale(2, Partition{2, 1}) == Partition{4, 2});
  CHECK(concatenate(Composition{2, 2}, Composition{4}) == Composition{2, 2, 4});
  CHECK(divisible_by(Partition{4, 2}, 2));
  CHECK_FALSE(divisible_by(Partition{5, 1}, 2));
  CHECK(divide(Partition{6, 3}, 3) == Partition{2, 1});
  CHECK_FALSE(divide(Partition{6, 2}, 3).has_value());
  CHECK(is_prime(2));
  CHECK(is_prime(251));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
