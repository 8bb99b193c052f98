#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pkostka {

/// Exact non-negative integer used for factorials, hook products and
/// multinomial coefficients.
using Natural = boost::multiprecision::cpp_int;

/// Finite sequence of non-negative integers in arbitrary order.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Number of entries, zeros included.
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  /// Number of non-zero entries.
  int length() const noexcept;
  int degree() const noexcept;
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so (r-1,1,0) and (r-1,1) compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// non-negative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int degree() const noexcept { return degree_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// i-th part (0-based); zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Composition as_composition() const { return Composition(parts_); }

  /// "4,2,1"; the empty partition prints as "-".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
  /// Lexicographic on parts.
  friend auto operator<=>(const Partition& a, const Partition& b) noexcept { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Parses "4,2,1". The empty string, "0" and "-" all denote the empty
/// partition. Non-decreasing input is rejected unless `sort` is set.
Partition parse_partition(std::string_view text, bool sort = false);

bool is_prime(std::int64_t n);

/// True iff every partial sum of `mu` is at least the corresponding partial
/// sum of `lambda`. Throws std::invalid_argument on a degree mismatch.
bool dominates(const Partition& mu, const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// Little-endian base-p digits of m (empty for m = 0).
std::vector<int> p_digits(std::int64_t m, int p);
/// Largest v with p^v dividing m; throws for m <= 0.
int p_valuation(std::int64_t m, int p);

bool is_p_restricted(const Partition& lambda, int p);

/// The unique decomposition lambda = sum_i digits[i] * p^i into p-restricted
/// partitions. `digits` is empty for the empty partition and otherwise has a
/// non-empty last entry.
struct PAdicExpansion {
  int prime = 2;
  std::vector<Partition> digits;

  /// Highest level s with a non-empty digit; -1 for the empty partition.
  int top_level() const noexcept { return static_cast<int>(digits.size()) - 1; }
  /// (|lambda(0)|, |lambda(1)|, ...).
  std::vector<int> level_degrees() const;
  Partition reconstruct() const;
};

PAdicExpansion p_adic_expansion(const Partition& lambda, int p);

/// Partition with |lambda(i)| parts equal to p^i, i.e. the Young subgroup
/// controlling the vertex of Y^lambda.
Partition young_vertex(const Partition& lambda, int p);

struct BlockLabel {
  Partition core;
  int weight = 0;
  auto operator<=>(const BlockLabel&) const = default;
};

enum class HookOrder { smallest_first, largest_first };

/// p-core and p-weight, obtained by removing rim p-hooks (on beta-numbers)
/// in the given order until none remain.
BlockLabel p_core(const Partition& lambda, int p, HookOrder order = HookOrder::largest_first);

std::vector<int> hook_lengths(const Partition& lambda);
/// Number of standard tableaux of shape lambda.
Natural hook_dimension(const Partition& lambda);
/// r! / prod lambda_i!, the dimension of M^lambda.
Natural multinomial(const Composition& gamma);
Natural factorial(int n);

/// Every partition of r exactly once, in descending lexicographic order
/// (which refines descending dominance).
std::vector<Partition> partitions_of(int r);

Partition sort_to_partition(const Composition& gamma);

Partition pointwise_add(const Partition& lambda, const Partition& mu);
Partition scale(int a, const Partition& lambda);
Composition concatenate(const Composition& lambda, const Composition& mu);

bool divisible_by(const Partition& lambda, int a);
/// lambda / a when every part is divisible by a.
std::optional<Partition> divide(const Partition& lambda, int a);

}  // namespace pkostka
