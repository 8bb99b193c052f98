#include "pkostka/indecomposability.hpp"

#include <stdexcept>

#include "pkostka/engine.hpp"

namespace pkostka {

namespace {

void check_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

int bit_length(int j) {
  int n = 0;
  while ((1 << n) <= j) ++n;
  return n;
}

// Largest s < j with [M^(r-j,j) : Y^(r-s,s)] = 1.
std::optional<Partition> two_part_witness(int r, int j, int p) {
  for (int s = j - 1; s >= 0; --s)
    if (two_part_pkostka(r, j, s, p)) return s ? Partition{r - s, s} : Partition{r};
  return std::nullopt;
}

}  // namespace

IndecomposabilityVerdict two_part_verdict(int r, int j) {
  if (r % 2 != 0 || j <= 0 || 2 * j > r) throw std::invalid_argument("two_part_verdict: need r even and 0 < 2j <= r");
  const int nj = bit_length(j);
  const int beta = r - 2 * j;
  if (beta % (1 << nj) == 0) return {true, std::nullopt, "two-part"};
  const int step = 1 << p_valuation(beta, 2);
  const int s = j - step;
  return {false, s ? Partition{r - s, s} : Partition{r}, "two-part"};
}

IndecomposabilityVerdict is_indecomposable(const Partition& lambda, int p) {
  check_prime(p);
  const int r = lambda.degree();
  if (lambda.length() <= 1) return {true, std::nullopt, "trivial"};
  const bool two_parts = lambda.length() == 2;
  if (p != 2) {
    const bool hook = lambda == Partition{r - 1, 1};
    if (r % p == 0 && hook) return {true, std::nullopt, "odd-prime"};
    IndecomposabilityVerdict v{false, std::nullopt, "odd-prime"};
    if (two_parts) v.witness = two_part_witness(r, lambda[1], p);
    return v;
  }
  const std::optional<Partition> hook_witness =
      lambda.length() == 3 && lambda[1] == 1 ? std::optional<Partition>(Partition{r - 1, 1}) : std::nullopt;
  if (r % 2 != 0) return {false, two_parts ? two_part_witness(r, lambda[1], 2) : hook_witness, "odd-degree"};
  if (!two_parts) return {false, hook_witness, "long-partition"};
  return two_part_verdict(r, lambda[1]);
}

std::vector<Partition> indecomposable_partitions(int r, int p) {
  check_prime(p);
  if (r < 1) throw std::invalid_argument("indecomposable_partitions: need r >= 1");
  std::vector<Partition> out{Partition{r}};
  if (p != 2) {
    if (r % p == 0) out.push_back(Partition{r - 1, 1});
    return out;
  }
  if (r % 2 != 0) return out;
  const int n = bit_length(r) - 1;
  const int half_beta = (r - (1 << n)) / 2;
  for (int i = 1; i <= n; ++i) {
    const int lo = 1 << (i - 1), modulus = 1 << (i - 1);
    const int k = lo + ((half_beta - lo) % modulus + modulus) % modulus;
    out.push_back(Partition{r - k, k});
  }
  return out;
}

bool has_nonprincipal_summand(const Partition& lambda, int p) {
  check_prime(p);
  const int r = lambda.degree();
  if (p == 2 && r % 2 == 0) return lambda.length() >= 3 && r >= 6 && lambda != Partition{r - 2, 1, 1};
  // S_3 in characteristic 3 has a single block, so k S_3 = Y^(2,1) + Y^(1,1,1) stays principal
  if (p == 3 && r == 3) return false;
  return !is_indecomposable(lambda, p).indecomposable;
}

}  // namespace pkostka
