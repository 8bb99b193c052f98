#include <doctest.h>

#include "pkostka/character.hpp"
#include "pkostka/engine.hpp"
#include "pkostka/indecomposability.hpp"

using namespace pkostka;

TEST_CASE("verdict examples") {
  CHECK(is_indecomposable(Partition{63, 63}, 2).indecomposable);
  CHECK(is_indecomposable(Partition{5, 1}, 3).indecomposable);
  const auto v = is_indecomposable(Partition{4, 2}, 2);
  CHECK_FALSE(v.indecomposable);
  CHECK(v.witness == Partition{6});
  const auto w = two_part_verdict(6, 2);
  CHECK_FALSE(w.indecomposable);
  CHECK(w.witness == Partition{6});
  for (int j = 1; j <= 40; ++j) CHECK(two_part_verdict(2 * j, j).indecomposable);
  CHECK(two_part_verdict(126, 63).indecomposable);
  CHECK(indecomposable_partitions(8, 2) == std::vector<Partition>{{8}, {7, 1}, {6, 2}, {4, 4}});
  CHECK(indecomposable_partitions(6, 3) == std::vector<Partition>{{6}, {5, 1}});
  CHECK(indecomposable_partitions(126, 2) ==
        std::vector<Partition>{{126}, {125, 1}, {123, 3}, {119, 7}, {111, 15}, {95, 31}, {63, 63}});
}

TEST_CASE("small degrees at p=2") {
  CHECK_FALSE(is_indecomposable(Partition{1, 1, 1, 1}, 2).indecomposable);
  const auto v = is_indecomposable(Partition{2, 1, 1}, 2);
  CHECK_FALSE(v.indecomposable);
  CHECK(v.witness == Partition{3, 1});
  for (int r = 4; r <= 20; ++r) CHECK(is_indecomposable(Partition{r - 2, 1, 1}, 2).witness == Partition{r - 1, 1});
}

TEST_CASE("verdict invariants") {
  for (int p : {2, 3, 5})
    for (int r = 1; r <= 14; ++r)
      for (const auto& l : partitions_of(r)) {
        const auto v = is_indecomposable(l, p);
        if (v.indecomposable) CHECK_FALSE(v.witness.has_value());
        if (!v.indecomposable && l.length() == 2 && p == 2) CHECK(v.witness.has_value());
        if (v.witness) CHECK(dominates(*v.witness, l));
        CHECK_FALSE(v.rule.empty());
      }
}

TEST_CASE("two-part verdicts agree with Lucas") {
  for (int r = 2; r <= 200; r += 2)
    for (int j = 1; 2 * j <= r; ++j) {
      const auto v = two_part_verdict(r, j);
      bool any = false;
      for (int s = 0; s < j; ++s) any = any || two_part_pkostka(r, j, s, 2);
      CHECK(v.indecomposable == !any);
      if (!v.indecomposable) {
        REQUIRE(v.witness.has_value());
        CHECK((*v.witness)[0] + (*v.witness)[1] == r);
        CHECK(two_part_pkostka(r, j, (*v.witness)[1], 2) == 1);
      }
    }
}

TEST_CASE("cardinality of the two-part list") {
  for (int r = 2; r <= 256; r += 2) {
    int n = 0;
    while ((2 << n) <= r) ++n;
    const auto list = indecomposable_partitions(r, 2);
    CHECK(static_cast<int>(list.size()) == n + 1);
    REQUIRE(list.size() >= 2);
    CHECK(list[1] == Partition{r - 1, 1});
    CHECK(list.back() == Partition{r / 2, r / 2});
  }
}

TEST_CASE("M^(r-1,1) is indecomposable exactly when p divides r") {
  for (int p : {2, 3, 5})
    for (int r = 2; r <= 40; ++r) CHECK(is_indecomposable(Partition{r - 1, 1}, p).indecomposable == (r % p == 0));
}

TEST_CASE("non-principal summands") {
  CHECK_FALSE(has_nonprincipal_summand(Partition{4, 1, 1}, 2));
  CHECK(has_nonprincipal_summand(Partition{3, 2, 1}, 2));
  for (int r = 1; r <= 10; ++r) CHECK_FALSE(has_nonprincipal_summand(Partition{r}, 3));
  for (int p : {2, 3})
    for (int r = 1; r <= 10; ++r)
      for (const auto& l : partitions_of(r)) CHECK(has_nonprincipal_summand(l, p) == spans_multiple_blocks(l, p));
}

TEST_CASE("doubling and shifting") {
  for (int r = 2; r <= 128; r += 2) {
    std::set<Partition> doubled, target;
    for (const auto& l : indecomposable_partitions(r, 2)) doubled.insert(scale(2, l));
    for (const auto& l : indecomposable_partitions(2 * r, 2))
      if (l != Partition{2 * r - 1, 1}) target.insert(l);
    CHECK(doubled == target);
  }
  for (int r = 2; r <= 64; r += 2) {
    int n = 0;
    while ((2 << n) <= r) ++n;
    for (int k = n; k <= n + 3; ++k)
      for (int j = 1; 2 * j <= r; ++j)
        CHECK(two_part_verdict(r, j).indecomposable == two_part_verdict(r + (1 << k), j).indecomposable);
  }
}
