#pragma once

// Closed-form classification of the indecomposable Young permutation
// modules M^lambda in characteristic p.

#include <optional>
#include <string>
#include <vector>

#include "pkostka/partition.hpp"

namespace pkostka {

struct IndecomposabilityVerdict {
  bool indecomposable = false;
  /// A Young label mu != lambda known to occur in M^lambda.
  std::optional<Partition> witness;
  /// "trivial", "odd-prime", "odd-degree", "long-partition" or "two-part".
  std::string rule;
};

IndecomposabilityVerdict is_indecomposable(const Partition& lambda, int p);

/// All lambda |- r with M^lambda indecomposable, in descending lexicographic
/// order. Requires r >= 1.
std::vector<Partition> indecomposable_partitions(int r, int p);

/// p = 2 and lambda = (r-j, j) with r even and 0 < 2j <= r.
IndecomposabilityVerdict two_part_verdict(int r, int j);

/// Whether M^lambda has an indecomposable summand outside the principal block.
bool has_nonprincipal_summand(const Partition& lambda, int p);

}  // namespace pkostka
