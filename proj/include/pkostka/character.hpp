#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pkostka/partition.hpp"

namespace pkostka {

/// Non-negative integer combination of irreducible ordinary characters
/// chi^mu of one symmetric group. Zero multiplicities are never stored.
class CharacterVector {
 public:
  CharacterVector() = default;
  static CharacterVector irreducible(const Partition& mu) {
    CharacterVector v;
    v.add(mu, 1);
    return v;
  }

  /// Throws std::invalid_argument if mu has a different degree than the
  /// existing support.
  void add(const Partition& mu, std::int64_t mult);
  std::int64_t operator[](const Partition& mu) const;

  const std::map<Partition, std::int64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Degree of the underlying symmetric group; -1 when empty.
  int degree() const noexcept { return entries_.empty() ? -1 : entries_.begin()->first.degree(); }
  /// sum mult(mu) f^mu
  Natural dimension() const;
  /// Entries in descending lexicographic order, which refines descending
  /// dominance.
  std::vector<std::pair<Partition, std::int64_t>> sorted() const;

  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;

 private:
  std::map<Partition, std::int64_t> entries_;
};

/// Number of semistandard tableaux of shape `shape` and content `content`.
/// Memoized; safe to call concurrently.
std::int64_t kostka_number(const Partition& shape, const Partition& content);

/// c^lambda_{mu nu}: number of LR tableaux of shape lambda/mu and content nu.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Character of the induction product (outer tensor product induced up).
CharacterVector lr_product(const CharacterVector& u, const CharacterVector& v);

/// Character xi^lambda of M^lambda: sum_mu K_{mu lambda} chi^mu.
CharacterVector permutation_character(const Partition& lambda);

/// chi^(r) + chi^(r-1,1) + ... + chi^(r-d,d); requires 0 <= 2d <= r.
CharacterVector two_part_character(int r, int d);

/// Support grouped by p-core.
std::map<BlockLabel, CharacterVector> block_split(const CharacterVector& v, int p);

/// True iff xi^lambda has constituents in at least two p-blocks.
bool spans_multiple_blocks(const Partition& lambda, int p);

}  // namespace pkostka
