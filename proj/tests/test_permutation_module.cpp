#include <doctest.h>

#include <random>

#include "pkostka/oracle.hpp"
#include "pkostka/permutation_module.hpp"

using namespace pkostka;

TEST_CASE("tabloid counts") {
  CHECK(TabloidSet(Partition{2, 1}).size() == 3);
  CHECK(TabloidSet(Partition{2, 1, 1}).size() == 12);
  for (int r = 0; r <= 7; ++r)
    for (const auto& l : partitions_of(r)) {
      const TabloidSet t(l);
      CHECK(Natural(t.size()) == multinomial(l.as_composition()));
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(t.rank(t[i]) == i);
      const Word base = t[0];
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(act(t.coset_representative(t[i]), base) == t[i]);
    }
  CHECK_THROWS_AS(TabloidSet(Partition{1, 1, 1, 1, 1, 1, 1}, 100), BudgetExceeded);
}

TEST_CASE("action and inverse action") {
  const TabloidSet t(Partition{2, 2, 1});
  const Permutation g{4, 0, 3, 1, 2};
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(act_inverse(g, act(g, t[i])) == t[i]);
}

TEST_CASE("adjacent transpositions satisfy the Coxeter relations") {
  for (const auto& l : {Partition{2, 1}, Partition{2, 1, 1}, Partition{3, 2}, Partition{2, 2, 1, 1}}) {
    const PermutationModule m(l, 2);
    const auto n = m.dimension();
    const int r = l.degree();
    auto apply = [&](int i, std::uint32_t x) { return m.generator(i)[x]; };
    for (int i = 0; i + 1 < r; ++i) {
      std::vector<bool> hit(n, false);
      for (std::uint32_t x = 0; x < n; ++x) {
        CHECK(apply(i, apply(i, x)) == x);
        hit[apply(i, x)] = true;
        if (i + 2 < r) CHECK(apply(i, apply(i + 1, apply(i, x))) == apply(i + 1, apply(i, apply(i + 1, x))));
        for (int j = i + 2; j + 1 < r; ++j) CHECK(apply(i, apply(j, x)) == apply(j, apply(i, x)));
      }
      for (bool h : hit) CHECK(h);
    }
  }
  // M^(1,1) is the regular module of C_2
  const PermutationModule reg(Partition{1, 1}, 2);
  CHECK(reg.dimension() == 2);
  CHECK(reg.generator(0) == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("Hom dimensions count contingency matrices") {
  auto hom_dim = [](const Partition& a, const Partition& b) {
    return HomSpace(a, std::make_shared<TabloidSet>(b)).dimension();
  };
  CHECK(hom_dim(Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(hom_dim(Partition{1, 1, 1}, Partition{1, 1, 1}) == 6);
  for (int r = 0; r <= 6; ++r)
    for (const auto& a : partitions_of(r)) {
      CHECK(hom_dim(Partition{r}, a) == 1);
      for (const auto& b : partitions_of(r)) {
        CHECK(hom_dim(a, b) == count_contingency_matrices(a, b));
        CHECK(hom_dim(a, b) == hom_dim(b, a));
      }
    }
}

TEST_CASE("orbit sums are intertwiners") {
  const gf::Scalar p = 3;
  const Partition a{2, 1, 1}, b{3, 1};
  const PermutationModule ma(a, static_cast<int>(p)), mb(b, static_cast<int>(p));
  const HomSpace hom(a, std::make_shared<TabloidSet>(b));
  for (std::size_t i = 0; i < hom.dimension(); ++i) {
    const gf::Matrix phi = hom.map_matrix(gf::Vector::Unit(static_cast<gf::Index>(hom.dimension()), i), ma.basis(), p);
    for (int g = 0; g + 1 < a.degree(); ++g)
      CHECK(gf::product(phi, ma.generator_matrix(g), p) == gf::product(mb.generator_matrix(g), phi, p));
  }
}

TEST_CASE("composition tables agree with matrix products") {
  const gf::Scalar p = 2;
  const Partition a{2, 1, 1}, b{2, 2}, c{3, 1};
  auto ta = std::make_shared<TabloidSet>(a), tb = std::make_shared<TabloidSet>(b), tc = std::make_shared<TabloidSet>(c);
  const HomSpace ab(a, tb), bc(b, tc), ac(a, tc);
  const CompositionTable table(ab, bc, ac);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const gf::Vector phi = random_vector(static_cast<gf::Index>(ab.dimension()), p, rng);
    const gf::Vector psi = random_vector(static_cast<gf::Index>(bc.dimension()), p, rng);
    const gf::Matrix lhs = ac.map_matrix(table.compose(psi, phi, p), *ta, p);
    const gf::Matrix rhs = gf::product(bc.map_matrix(psi, *tb, p), ab.map_matrix(phi, *ta, p), p);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("endomorphism algebras") {
  std::mt19937_64 rng(9);
  for (const auto& l : {Partition{2, 1}, Partition{2, 1, 1}, Partition{3, 2, 1}}) {
    const auto hom = std::make_shared<HomSpace>(l, std::make_shared<TabloidSet>(l));
    const EndomorphismAlgebra a(hom, 3);
    CHECK(static_cast<std::size_t>(a.dimension()) == count_contingency_matrices(l, l));
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = random_vector(a.dimension(), 3, rng), y = random_vector(a.dimension(), 3, rng),
                 z = random_vector(a.dimension(), 3, rng);
      CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
      CHECK(a.multiply(a.one(), x) == x);
      CHECK(a.multiply(x, a.one()) == x);
    }
  }
  const auto big = std::make_shared<HomSpace>(Partition{1, 1, 1, 1}, std::make_shared<TabloidSet>(Partition{1, 1, 1, 1}));
  CHECK_THROWS_AS(EndomorphismAlgebra(big, 2, 10), BudgetExceeded);
}
