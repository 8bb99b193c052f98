#include "pkostka/permutation_module.hpp"

#include <algorithm>
#include <functional>

namespace pkostka {

namespace {

std::vector<int> row_starts(const Partition& lambda) {
  std::vector<int> starts(lambda.length() + 1, 0);
  for (int k = 0; k < lambda.length(); ++k) starts[k + 1] = starts[k] + lambda[k];
  return starts;
}

}  // namespace

TabloidSet::TabloidSet(const Partition& lambda, std::size_t budget) : shape_(lambda), starts_(row_starts(lambda)) {
  if (lambda.length() > 255) throw std::invalid_argument("TabloidSet: too many rows");
  const Natural count = multinomial(lambda.as_composition());
  if (count > budget)
    throw BudgetExceeded("M^(" + lambda.to_string() + ") has " + count.str() + " tabloids, budget " +
                         std::to_string(budget));
  Word w;
  w.reserve(lambda.degree());
  for (int k = 0; k < lambda.length(); ++k) w.insert(w.end(), lambda[k], static_cast<std::uint8_t>(k));
  words_.reserve(static_cast<std::size_t>(count));
  do {
    words_.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::size_t TabloidSet::rank(const Word& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) throw std::out_of_range("word is not a tabloid of this shape");
  return static_cast<std::size_t>(it - words_.begin());
}

Permutation TabloidSet::coset_representative(const Word& w) const {
  std::vector<int> next(starts_.begin(), starts_.end() - 1);
  Permutation g(w.size());
  for (int x = 0; x < static_cast<int>(w.size()); ++x) g[next[w[x]]++] = x;
  return g;
}

Word act(const Permutation& g, const Word& w) {
  Word out(w.size());
  for (std::size_t x = 0; x < w.size(); ++x) out[g[x]] = w[x];
  return out;
}

Word act_inverse(const Permutation& g, const Word& w) {
  Word out(w.size());
  for (std::size_t x = 0; x < w.size(); ++x) out[x] = w[g[x]];
  return out;
}

PermutationModule::PermutationModule(const Partition& lambda, int p, std::size_t budget)
    : basis_(std::make_shared<TabloidSet>(lambda, budget)), p_(p) {
  const int r = lambda.degree();
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<std::uint32_t> image(basis_->size());
    for (std::size_t t = 0; t < basis_->size(); ++t) {
      Word w = (*basis_)[t];
      std::swap(w[i], w[i + 1]);
      image[t] = static_cast<std::uint32_t>(basis_->rank(w));
    }
    generators_.push_back(std::move(image));
  }
}

gf::Matrix PermutationModule::generator_matrix(int i) const {
  const auto n = static_cast<gf::Index>(dimension());
  gf::Matrix m = gf::Matrix::Zero(n, n);
  const auto& image = generator(i);
  for (gf::Index t = 0; t < n; ++t) m(image[t], t) = 1;
  return m;
}

HomSpace::HomSpace(const Partition& lambda, std::shared_ptr<const TabloidSet> target, bool reverse_order)
    : source_(lambda), target_(std::move(target)) {
  if (lambda.degree() != target_->degree()) throw std::invalid_argument("HomSpace: degree mismatch");
  const std::vector<int> starts = row_starts(lambda);
  const int rows = lambda.length(), cols = target_->shape().length();
  std::vector<int> block(lambda.degree());
  for (int k = 0; k < rows; ++k)
    for (int x = starts[k]; x < starts[k + 1]; ++x) block[x] = k;

  std::map<std::vector<int>, std::uint32_t> index;
  orbit_of_.resize(target_->size());
  std::vector<int> key(static_cast<std::size_t>(rows) * cols);
  for (std::size_t t = 0; t < target_->size(); ++t) {
    const Word& w = (*target_)[t];
    std::fill(key.begin(), key.end(), 0);
    for (std::size_t x = 0; x < w.size(); ++x) ++key[block[x] * cols + w[x]];
    auto [it, fresh] = index.emplace(key, static_cast<std::uint32_t>(representatives_.size()));
    if (fresh) {
      representatives_.push_back(w);
      std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
      for (int k = 0; k < rows; ++k)
        for (int l = 0; l < cols; ++l) m[k][l] = key[k * cols + l];
      matrices_.push_back(std::move(m));
      members_.emplace_back();
    }
    orbit_of_[t] = it->second;
    members_[it->second].push_back(static_cast<std::uint32_t>(t));
  }
  if (reverse_order) {
    const auto d = static_cast<std::uint32_t>(representatives_.size());
    std::reverse(representatives_.begin(), representatives_.end());
    std::reverse(matrices_.begin(), matrices_.end());
    std::reverse(members_.begin(), members_.end());
    for (auto& o : orbit_of_) o = d - 1 - o;
  }
}

gf::Vector HomSpace::expand(const gf::Vector& coords) const {
  gf::Vector out(static_cast<gf::Index>(target_->size()));
  for (std::size_t t = 0; t < target_->size(); ++t) out(t) = coords(orbit_of_[t]);
  return out;
}

gf::Matrix HomSpace::map_matrix(const gf::Vector& coords, const TabloidSet& source_tabloids, gf::Scalar p) const {
  const auto rows = static_cast<gf::Index>(target_->size());
  const auto cols = static_cast<gf::Index>(source_tabloids.size());
  gf::Matrix m(rows, cols);
  for (gf::Index s = 0; s < cols; ++s) {
    const Permutation g = source_tabloids.coset_representative(source_tabloids[s]);
    for (gf::Index u = 0; u < rows; ++u)
      m(u, s) = gf::mod(coords(orbit_of_[target_->rank(act_inverse(g, (*target_)[u]))]), p);
  }
  return m;
}

std::size_t count_contingency_matrices(const Partition& rows, const Partition& cols) {
  if (rows.degree() != cols.degree()) return 0;
  std::vector<int> remaining(cols.parts());
  const int nrows = rows.length(), ncols = cols.length();
  std::size_t count = 0;
  std::function<void(int, int, int)> fill = [&](int i, int j, int left) {
    if (i == nrows) {
      ++count;
      return;
    }
    if (j == ncols - 1) {
      if (left > remaining[j]) return;
      remaining[j] -= left;
      fill(i + 1, 0, i + 1 < nrows ? rows[i + 1] : 0);
      remaining[j] += left;
      return;
    }
    for (int v = std::min(left, remaining[j]); v >= 0; --v) {
      remaining[j] -= v;
      fill(i, j + 1, left - v);
      remaining[j] += v;
    }
  };
  if (nrows == 0) return 1;
  fill(0, 0, rows[0]);
  return count;
}

CompositionTable::CompositionTable(const HomSpace& alpha_beta, const HomSpace& beta_gamma, const HomSpace& alpha_gamma)
    : alpha_beta_(&alpha_beta), rows_(alpha_beta.target().size()), cols_(alpha_gamma.dimension()) {
  if (beta_gamma.source() != alpha_beta.target().shape() || alpha_gamma.source() != alpha_beta.source() ||
      alpha_gamma.target().shape() != beta_gamma.target().shape())
    throw std::invalid_argument("CompositionTable: incompatible spaces");
  table_.resize(rows_ * cols_);
  const TabloidSet& beta = alpha_beta.target();
  const TabloidSet& gamma = beta_gamma.target();
  for (std::size_t s = 0; s < rows_; ++s) {
    const Permutation g = beta.coset_representative(beta[s]);
    for (std::size_t c = 0; c < cols_; ++c)
      table_[s * cols_ + c] = beta_gamma.orbit_of(gamma.rank(act_inverse(g, alpha_gamma.representative(c))));
  }
}

gf::Vector CompositionTable::compose(const gf::Vector& psi, const gf::Vector& phi, gf::Scalar p) const {
  gf::Vector out = gf::Vector::Zero(static_cast<gf::Index>(cols_));
  for (std::size_t s = 0; s < rows_; ++s) {
    const gf::Scalar f = phi(alpha_beta_->orbit_of(s));
    if (!f) continue;
    const std::uint32_t* row = &table_[s * cols_];
    for (std::size_t c = 0; c < cols_; ++c) out(c) += f * psi(row[c]);
    if ((s & 255) == 255) out = gf::reduce(out, p);
  }
  return gf::reduce(out, p);
}

std::vector<gf::Vector> CompositionTable::compose_with_basis(const gf::Vector& psi, gf::Scalar p) const {
  std::vector<gf::Vector> out;
  out.reserve(alpha_beta_->dimension());
  for (std::size_t i = 0; i < alpha_beta_->dimension(); ++i) {
    gf::Vector v = gf::Vector::Zero(static_cast<gf::Index>(cols_));
    for (std::uint32_t s : alpha_beta_->members(i)) {
      const std::uint32_t* row = &table_[s * cols_];
      for (std::size_t c = 0; c < cols_; ++c) v(c) += psi(row[c]);
    }
    out.push_back(gf::reduce(v, p));
  }
  return out;
}

}  // namespace pkostka
