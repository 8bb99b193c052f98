#include <doctest.h>

#include <algorithm>

#include "pkostka/character.hpp"
#include "pkostka/engine.hpp"
#include "pkostka/indecomposability.hpp"
#include "pkostka/oracle.hpp"

using namespace pkostka;

namespace {

std::map<Partition, std::pair<std::size_t, int>> summary(const DecompositionRecord& rec) {
  std::map<Partition, std::pair<std::size_t, int>> out;
  for (const auto& e : rec.summands) out[e.label] = {e.dimension, e.multiplicity};
  return out;
}

std::multiset<std::size_t> dimensions(const DecompositionRecord& rec) {
  std::multiset<std::size_t> out;
  for (const auto& e : rec.summands)
    for (int k = 0; k < e.multiplicity; ++k) out.insert(e.dimension);
  return out;
}

}  // namespace

TEST_CASE("M^(2,1,1) at p=2") {
  YoungOracle o(2);
  const auto rec = o.decompose(Partition{2, 1, 1});
  using Entry = std::pair<std::size_t, int>;
  CHECK(summary(rec) == std::map<Partition, Entry>{{{3, 1}, {4, 1}}, {{2, 1, 1}, {8, 1}}});
  CHECK(o.multiplicity(Partition{2, 1, 1}, Partition{3, 1}) == 1);
  CHECK(o.multiplicity(Partition{2, 1, 1}, Partition{4}) == 0);
  CHECK(o.multiplicity(Partition{2, 1, 1}, Partition{2, 2}) == 0);

  // the 4-dimensional summand is M^(3,1)
  const auto& s = o.summands(Partition{2, 1, 1});
  REQUIRE(s.size() == 2);
  const std::size_t four = o.summand_basis(Partition{2, 1, 1}, 0).cols() == 4 ? 0 : 1;
  CHECK(o.summand_basis(Partition{2, 1, 1}, four).cols() == 4);
  CHECK(o.isomorphic(Partition{2, 1, 1}, four, Partition{3, 1}, 0));
  CHECK(o.isomorphic(Partition{2, 1, 1}, four, Partition{2, 1, 1}, four));
  CHECK_FALSE(o.isomorphic(Partition{2, 1, 1}, 0, Partition{2, 1, 1}, 1));
}

TEST_CASE("summand bases are submodules of the right dimension") {
  YoungOracle o(2);
  const Partition l{2, 1, 1};
  const PermutationModule m(l, 2);
  std::size_t total = 0;
  for (std::size_t i = 0; i < o.summands(l).size(); ++i) {
    const gf::Matrix basis = o.summand_basis(l, i);
    CHECK(gf::rank(basis, 2) == basis.cols());
    total += static_cast<std::size_t>(basis.cols());
    for (int g = 0; g + 1 < l.degree(); ++g) {
      gf::Matrix both(basis.rows(), 2 * basis.cols());
      both << basis, gf::product(m.generator_matrix(g), basis, 2);
      CHECK(gf::rank(both, 2) == basis.cols());
    }
  }
  CHECK(total == m.dimension());
}

TEST_CASE("small modules") {
  YoungOracle o2(2), o3(3);
  for (int r = 1; r <= 6; ++r) {
    const auto rec = o3.decompose(Partition{r});
    REQUIRE(rec.summands.size() == 1);
    CHECK(rec.summands[0].dimension == 1);
  }
  const auto reg = o2.decompose(Partition{1, 1});
  REQUIRE(reg.summands.size() == 1);
  CHECK(reg.summands[0].dimension == 2);
  CHECK(reg.summands[0].label == Partition{1, 1});
}

TEST_CASE("label tables") {
  YoungOracle o2(2), o3(3);
  const auto t2 = o2.table(2);
  CHECK(t2.multiplicity(Partition{2}, Partition{2}) == 1);
  CHECK(t2.multiplicity(Partition{1, 1}, Partition{1, 1}) == 1);
  CHECK(t2.multiplicity(Partition{1, 1}, Partition{2}) == 0);
  const auto t4 = o2.table(4);
  using Entry = std::pair<std::size_t, int>;
  CHECK(summary(t4.rows.at(3)) == std::map<Partition, Entry>{{{3, 1}, {4, 1}}, {{2, 1, 1}, {8, 1}}});
  const auto row = o3.decompose(Partition{1, 1, 1});
  std::set<Partition> labels;
  for (const auto& e : row.summands) labels.insert(e.label);
  CHECK(labels == std::set<Partition>{{2, 1}, {1, 1, 1}});
}

TEST_CASE("dimensions add up and labels are unitriangular for r <= 6") {
  for (int p : {2, 3, 5}) {
    YoungOracle o(p);
    for (int r = 1; r <= 6; ++r)
      for (const auto& l : partitions_of(r)) {
        const auto rec = o.decompose(l);
        CHECK(Natural(rec.total_dimension()) == multinomial(l.as_composition()));
        CHECK(rec.multiplicity(l) == 1);
        for (const auto& e : rec.summands) CHECK(dominates(e.label, l));
        // each summand lies in one block, which must meet the ordinary character
        std::set<Partition> cores;
        const auto xi = permutation_character(l);
        for (const auto& [mu, m] : xi.entries()) cores.insert(p_core(mu, p).core);
        for (const auto& e : rec.summands) CHECK(cores.count(p_core(e.label, p).core));
      }
  }
}

TEST_CASE("idempotents of End(M^lambda) are orthogonal and sum to one") {
  YoungOracle o(3);
  for (int r = 2; r <= 5; ++r)
    for (const auto& l : partitions_of(r)) {
      const auto& a = o.endomorphisms(l);
      const auto& s = o.summands(l);
      gf::Vector sum = gf::Vector::Zero(a.dimension());
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& e = s[i].idempotent.element;
        CHECK(a.multiply(e, e) == e);
        for (std::size_t j = 0; j < s.size(); ++j)
          if (i != j) CHECK(a.multiply(e, s[j].idempotent.element).isZero());
        sum += e;
      }
      CHECK(gf::reduce(sum, 3) == a.one());
    }
}

TEST_CASE("reversed bases and other seeds give the same decomposition") {
  for (int p : {2, 3}) {
    YoungOracle a(p);
    OracleOptions opt;
    opt.reverse_basis = true;
    opt.seed = 12345;
    YoungOracle b(p, opt);
    for (int r = 1; r <= 5; ++r)
      for (const auto& l : partitions_of(r)) {
        const auto x = a.decompose(l), y = b.decompose(l);
        CHECK(dimensions(x) == dimensions(y));
        CHECK(summary(x) == summary(y));
      }
  }
}

TEST_CASE("two-part multiplicities match Lucas' theorem") {
  YoungOracle o(2);
  for (int r = 2; r <= 8; ++r)
    for (int j = 0; 2 * j <= r; ++j)
      for (int s = 0; s <= j; ++s) {
        const Partition l = j ? Partition{r - j, j} : Partition{r};
        const Partition m = s ? Partition{r - s, s} : Partition{r};
        CHECK(o.multiplicity(l, m) == two_part_pkostka(r, j, s, 2));
      }
}

TEST_CASE("budgets") {
  OracleOptions opt;
  opt.tabloid_budget = 100;
  YoungOracle o(2, opt);
  CHECK(o.within_budget(Partition{3, 2}));
  CHECK_FALSE(o.within_budget(Partition{1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(o.try_multiplicity(Partition{1, 1, 1, 1, 1, 1}, Partition{2, 1, 1, 1, 1}).has_value());
  CHECK_THROWS_AS(o.decompose(Partition{1, 1, 1, 1, 1, 1}), BudgetExceeded);
  CHECK(o.try_multiplicity(Partition{3, 2}, Partition{4, 1}) == std::optional<int>(1));
}

TEST_CASE("indecomposability witnesses occur in the decomposition") {
  for (int p : {2, 3, 5}) {
    YoungOracle o(p);
    for (int r = 1; r <= 6; ++r)
      for (const auto& l : partitions_of(r)) {
        const auto v = is_indecomposable(l, p);
        if (v.witness) CHECK(o.multiplicity(l, *v.witness) > 0);
      }
  }
}

TEST_CASE("recorded dimensions match the summands themselves") {
  for (int p : {2, 3, 5}) {
    YoungOracle o(p);
    for (int r = 1; r <= 5; ++r)
      for (const auto& l : partitions_of(r)) {
        const auto rec = o.decompose(l);
        std::multiset<std::size_t> direct;
        for (std::size_t i = 0; i < o.summands(l).size(); ++i)
          direct.insert(static_cast<std::size_t>(o.summand_basis(l, i).cols()));
        CHECK(direct == dimensions(rec));
      }
  }
}
