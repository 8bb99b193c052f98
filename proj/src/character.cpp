#include "pkostka/character.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace pkostka {

void CharacterVector::add(const Partition& mu, std::int64_t mult) {
  if (mult == 0) return;
  if (!entries_.empty() && entries_.begin()->first.degree() != mu.degree())
    throw std::invalid_argument("CharacterVector: mixed degrees");
  const std::int64_t next = (entries_.count(mu) ? entries_[mu] : 0) + mult;
  if (next < 0) throw std::invalid_argument("CharacterVector: negative multiplicity");
  if (next == 0)
    entries_.erase(mu);
  else
    entries_[mu] = next;
}

std::int64_t CharacterVector::operator[](const Partition& mu) const {
  auto it = entries_.find(mu);
  return it == entries_.end() ? 0 : it->second;
}

Natural CharacterVector::dimension() const {
  Natural out = 0;
  for (const auto& [mu, mult] : entries_) out += hook_dimension(mu) * mult;
  return out;
}

std::vector<std::pair<Partition, std::int64_t>> CharacterVector::sorted() const {
  return {entries_.rbegin(), entries_.rend()};
}

namespace {

std::int64_t kostka_rec(const Partition& shape, const std::vector<int>& content,
                        std::map<std::pair<Partition, std::vector<int>>, std::int64_t>& memo) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape, content);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // the largest entry fills a horizontal strip of size content.back()
  const int strip = content.back();
  const std::vector<int> rest(content.begin(), content.end() - 1);
  const int len = shape.length();
  std::vector<int> inner(shape.parts());
  std::int64_t total = 0;
  std::function<void(int, int)> choose = [&](int row, int remaining) {
    if (row == len) {
      if (remaining == 0) total += kostka_rec(Partition(inner), rest, memo);
      return;
    }
    const int lo = shape[row + 1];
    for (int v = shape[row]; v >= lo; --v) {
      const int taken = shape[row] - v;
      if (taken > remaining) break;
      inner[row] = v;
      choose(row + 1, remaining - taken);
    }
    inner[row] = shape[row];
  };
  choose(0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t kostka_number(const Partition& shape, const Partition& content) {
  if (shape.degree() != content.degree()) throw std::invalid_argument("kostka_number: degree mismatch");
  static std::mutex mutex;
  static std::map<std::pair<Partition, std::vector<int>>, std::int64_t> memo;
  std::lock_guard lock(mutex);
  return kostka_rec(shape, content.parts(), memo);
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.degree() != mu.degree() + nu.degree()) return 0;
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > lambda[i]) return 0;
  static std::mutex mutex;
  static std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({lambda, mu, nu}); it != memo.end()) return it->second;
  }

  // cells of lambda/mu in reading order: rows top to bottom, right to left
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = lambda[i] - 1; j >= mu[i]; --j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> filling(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) filling[i].assign(lambda[i], 0);
  std::vector<int> used(nu.length() + 1, 0);
  std::int64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [i, j] = cells[k];
    int hi = nu.length();
    if (j + 1 < lambda[i]) hi = std::min(hi, filling[i][j + 1]);  // rows weakly increase
    int lo = 1;
    if (i > 0 && j >= mu[i - 1]) lo = filling[i - 1][j] + 1;  // columns strictly increase
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= nu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      ++used[v];
      filling[i][j] = v;
      place(k + 1);
      --used[v];
    }
    filling[i][j] = 0;
  };
  place(0);
  std::lock_guard lock(mutex);
  memo.emplace(std::make_tuple(lambda, mu, nu), count);
  return count;
}

CharacterVector lr_product(const CharacterVector& u, const CharacterVector& v) {
  CharacterVector out;
  if (u.empty() || v.empty()) return out;
  const int n = u.degree() + v.degree();
  const auto shapes = partitions_of(n);
  for (const auto& [mu, a] : u.entries())
    for (const auto& [nu, b] : v.entries())
      for (const auto& lambda : shapes) {
        const std::int64_t c = lr_coefficient(lambda, mu, nu);
        if (c) out.add(lambda, c * a * b);
      }
  return out;
}

CharacterVector permutation_character(const Partition& lambda) {
  CharacterVector out;
  for (const auto& mu : partitions_of(lambda.degree())) {
    if (!dominates(mu, lambda)) continue;
    out.add(mu, kostka_number(mu, lambda));
  }
  return out;
}

CharacterVector two_part_character(int r, int d) {
  if (d < 0 || 2 * d > r) throw std::invalid_argument("two_part_character: need 0 <= 2d <= r");
  CharacterVector out;
  for (int i = 0; i <= d; ++i) out.add(i ? Partition{r - i, i} : Partition{r}, 1);
  return out;
}

std::map<BlockLabel, CharacterVector> block_split(const CharacterVector& v, int p) {
  std::map<BlockLabel, CharacterVector> out;
  for (const auto& [mu, mult] : v.entries()) out[p_core(mu, p)].add(mu, mult);
  return out;
}

bool spans_multiple_blocks(const Partition& lambda, int p) {
  return block_split(permutation_character(lambda), p).size() >= 2;
}

}  // namespace pkostka
