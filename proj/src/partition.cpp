#include "pkostka/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pkostka {

namespace {

void require_non_negative(const std::vector<int>& parts) {
  for (int v : parts)
    if (v < 0) throw std::invalid_argument("negative part " + std::to_string(v));
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) { require_non_negative(parts_); }

int Composition::length() const noexcept {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int v) { return v != 0; }));
}

int Composition::degree() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_non_negative(parts_);
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw std::invalid_argument("parts are not weakly decreasing");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text, bool sort) {
  if (text.empty() || text == "0" || text == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
      throw std::invalid_argument("malformed partition token '" + std::string(token) + "' in '" +
                                  std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  if (sort) return sort_to_partition(Composition(std::move(parts)));
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw std::invalid_argument("partition '" + std::string(text) + "' is not weakly decreasing at token '" +
                                  std::to_string(parts[i]) + "'");
  return Partition(std::move(parts));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.degree() != lambda.degree())
    throw std::invalid_argument("dominance between partitions of different degrees");
  int a = 0, b = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    a += mu[i];
    b += lambda[i];
    if (a < b) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

std::vector<int> p_digits(std::int64_t m, int p) {
  if (m < 0) throw std::invalid_argument("p_digits of a negative number");
  if (p < 2) throw std::invalid_argument("base must be at least 2");
  std::vector<int> digits;
  while (m > 0) {
    digits.push_back(static_cast<int>(m % p));
    m /= p;
  }
  return digits;
}

int p_valuation(std::int64_t m, int p) {
  if (m <= 0) throw std::invalid_argument("p-adic valuation of a non-positive number");
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

bool is_p_restricted(const Partition& lambda, int p) {
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda[i] - lambda[i + 1] >= p) return false;
  return true;
}

std::vector<int> PAdicExpansion::level_degrees() const {
  std::vector<int> out;
  out.reserve(digits.size());
  for (const auto& d : digits) out.push_back(d.degree());
  return out;
}

Partition PAdicExpansion::reconstruct() const {
  std::vector<int> parts;
  std::int64_t weight = 1;
  for (const auto& d : digits) {
    if (parts.size() < d.parts().size()) parts.resize(d.parts().size(), 0);
    for (int j = 0; j < d.length(); ++j) parts[j] += static_cast<int>(d[j] * weight);
    weight *= prime;
  }
  return Partition(std::move(parts));
}

PAdicExpansion p_adic_expansion(const Partition& lambda, int p) {
  PAdicExpansion out;
  out.prime = p;
  const int len = lambda.length();
  // digits[i][j] is the i-th base-p digit of lambda_j - lambda_{j+1}
  std::vector<std::vector<int>> diff_digits(len);
  std::size_t levels = 0;
  for (int j = 0; j < len; ++j) {
    diff_digits[j] = p_digits(lambda[j] - lambda[j + 1], p);
    levels = std::max(levels, diff_digits[j].size());
  }
  for (std::size_t i = 0; i < levels; ++i) {
    std::vector<int> parts(len, 0);
    int running = 0;
    for (int j = len - 1; j >= 0; --j) {
      if (i < diff_digits[j].size()) running += diff_digits[j][i];
      parts[j] = running;
    }
    out.digits.emplace_back(std::move(parts));
  }
  return out;
}

Partition young_vertex(const Partition& lambda, int p) {
  const auto expansion = p_adic_expansion(lambda, p);
  std::vector<int> parts;
  std::int64_t power = 1;
  for (const auto& d : expansion.digits) {
    parts.insert(parts.end(), d.degree(), static_cast<int>(power));
    power *= p;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

BlockLabel p_core(const Partition& lambda, int p, HookOrder order) {
  const int len = lambda.length();
  std::set<int> beta;
  for (int i = 0; i < len; ++i) beta.insert(lambda[i] + len - 1 - i);
  int removed = 0;
  for (;;) {
    std::optional<int> pick;
    for (int b : beta) {
      if (b - p >= 0 && !beta.count(b - p)) {
        pick = b;
        if (order == HookOrder::smallest_first) break;
      }
    }
    if (!pick) break;
    beta.erase(*pick);
    beta.insert(*pick - p);
    ++removed;
  }
  std::vector<int> parts;
  int i = 0;
  for (auto it = beta.rbegin(); it != beta.rend(); ++it, ++i) parts.push_back(*it - (len - 1 - i));
  return {Partition(std::move(parts)), removed};
}

std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<int> hooks;
  hooks.reserve(lambda.degree());
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks.push_back((lambda[i] - j - 1) + (conj[j] - i - 1) + 1);
  return hooks;
}

Natural factorial(int n) {
  Natural out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Natural hook_dimension(const Partition& lambda) {
  Natural denominator = 1;
  for (int h : hook_lengths(lambda)) denominator *= h;
  return factorial(lambda.degree()) / denominator;
}

Natural multinomial(const Composition& gamma) {
  Natural denominator = 1;
  for (int part : gamma.parts()) denominator *= factorial(part);
  return factorial(gamma.degree()) / denominator;
}

std::vector<Partition> partitions_of(int r) {
  if (r < 0) throw std::invalid_argument("negative degree");
  std::vector<Partition> out;
  std::vector<int> current;
  // Descending lexicographic: choose the largest admissible next part first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(r, r);
  return out;
}

Partition sort_to_partition(const Composition& gamma) {
  std::vector<int> parts;
  for (int v : gamma.parts())
    if (v) parts.push_back(v);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition pointwise_add(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts(std::max(lambda.length(), mu.length()), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = lambda[i] + mu[i];
  return Partition(std::move(parts));
}

Partition scale(int a, const Partition& lambda) {
  if (a < 1) throw std::invalid_argument("scale factor must be positive");
  std::vector<int> parts = lambda.parts();
  for (int& v : parts) v *= a;
  return Partition(std::move(parts));
}

Composition concatenate(const Composition& lambda, const Composition& mu) {
  std::vector<int> parts = lambda.parts();
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  return Composition(std::move(parts));
}

bool divisible_by(const Partition& lambda, int a) {
  return std::all_of(lambda.parts().begin(), lambda.parts().end(), [a](int v) { return v % a == 0; });
}

std::optional<Partition> divide(const Partition& lambda, int a) {
  if (!divisible_by(lambda, a)) return std::nullopt;
  std::vector<int> parts = lambda.parts();
  for (int& v : parts) v /= a;
  return Partition(std::move(parts));
}

}  // namespace pkostka
