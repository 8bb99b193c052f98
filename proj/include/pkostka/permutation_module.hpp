#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "pkostka/gf.hpp"
#include "pkostka/partition.hpp"

namespace pkostka {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lambda-tabloid written as the row index of each element 0..r-1.
using Word = std::vector<std::uint8_t>;
/// A permutation of {0..r-1}.
using Permutation = std::vector<int>;

/// All lambda-tabloids in lexicographic order of their words. Index 0 is
/// the base tabloid t0 with rows {0..l1-1}, {l1..l1+l2-1}, ...
class TabloidSet {
 public:
  explicit TabloidSet(const Partition& lambda, std::size_t budget = SIZE_MAX);

  const Partition& shape() const noexcept { return shape_; }
  int degree() const noexcept { return shape_.degree(); }
  std::size_t size() const noexcept { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  /// Index of w; throws std::out_of_range if w is not a tabloid of this shape.
  std::size_t rank(const Word& w) const;
  /// First element of row k of t0.
  int row_start(int k) const { return starts_[k]; }

  /// The permutation g with g t0 = w that maps the j-th element of row k
  /// of t0 to the j-th smallest element of row k of w.
  Permutation coset_representative(const Word& w) const;

 private:
  Partition shape_;
  std::vector<int> starts_;
  std::vector<Word> words_;
};

/// g.w, defined by (g.w)[g(x)] = w[x].
Word act(const Permutation& g, const Word& w);
/// g^{-1}.w, i.e. x -> w[g(x)].
Word act_inverse(const Permutation& g, const Word& w);

/// M^lambda over F_p with the permutation action of the adjacent
/// transpositions (i, i+1).
class PermutationModule {
 public:
  PermutationModule(const Partition& lambda, int p, std::size_t budget = SIZE_MAX);

  const TabloidSet& basis() const noexcept { return *basis_; }
  int prime() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return basis_->size(); }
  /// Image of each basis tabloid under (i, i+1), 0 <= i < r-1.
  const std::vector<std::uint32_t>& generator(int i) const { return generators_.at(i); }
  /// Matrix of (i, i+1).
  gf::Matrix generator_matrix(int i) const;

 private:
  std::shared_ptr<const TabloidSet> basis_;
  int p_;
  std::vector<std::vector<std::uint32_t>> generators_;
};

/// Orbits of the Young subgroup S_lambda on nu-tabloids. Orbit i gives the
/// intertwiner M^lambda -> M^nu sending t0 to the sum of the orbit, so the
/// orbits form a basis of Hom(M^lambda, M^nu); they are labelled by the
/// contingency matrices with row sums lambda and column sums nu.
class HomSpace {
 public:
  HomSpace(const Partition& lambda, std::shared_ptr<const TabloidSet> target, bool reverse_order = false);

  const Partition& source() const noexcept { return source_; }
  const TabloidSet& target() const noexcept { return *target_; }
  std::size_t dimension() const noexcept { return representatives_.size(); }

  /// Lexicographically least word of orbit i.
  const Word& representative(std::size_t i) const { return representatives_[i]; }
  const std::vector<std::vector<int>>& contingency(std::size_t i) const { return matrices_[i]; }
  /// Orbit containing target tabloid t.
  std::uint32_t orbit_of(std::size_t t) const { return orbit_of_[t]; }
  const std::vector<std::uint32_t>& members(std::size_t i) const { return members_[i]; }

  /// Orbit coordinates -> vector on all target tabloids.
  gf::Vector expand(const gf::Vector& coords) const;
  /// Matrix (target tabloids x source tabloids) of the map with the given
  /// coordinates.
  gf::Matrix map_matrix(const gf::Vector& coords, const TabloidSet& source_tabloids, gf::Scalar p) const;

 private:
  Partition source_;
  std::shared_ptr<const TabloidSet> target_;
  std::vector<Word> representatives_;
  std::vector<std::vector<std::vector<int>>> matrices_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<std::vector<std::uint32_t>> members_;
};

/// Number of non-negative integer matrices with the given row and column
/// sums, by direct enumeration.
std::size_t count_contingency_matrices(const Partition& rows, const Partition& cols);

/// For intertwiners phi in Hom(alpha, beta) and psi in Hom(beta, gamma):
/// table[s][c] is the orbit in Hom(beta, gamma) of g_s^{-1} R_c, where s runs
/// over beta-tabloids and R_c over the representatives of Hom(alpha, gamma).
/// Then (psi o phi)_c = sum_s phi(s) psi(table[s][c]).
class CompositionTable {
 public:
  CompositionTable(const HomSpace& alpha_beta, const HomSpace& beta_gamma, const HomSpace& alpha_gamma);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t operator()(std::size_t s, std::size_t c) const { return table_[s * cols_ + c]; }

  /// psi o phi in the basis of Hom(alpha, gamma).
  gf::Vector compose(const gf::Vector& psi, const gf::Vector& phi, gf::Scalar p) const;
  /// psi o h_i for every basis vector h_i of Hom(alpha, beta).
  std::vector<gf::Vector> compose_with_basis(const gf::Vector& psi, gf::Scalar p) const;

 private:
  const HomSpace* alpha_beta_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> table_;
};

}  // namespace pkostka
