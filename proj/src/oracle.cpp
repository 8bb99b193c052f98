#include "pkostka/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace pkostka {

using gf::Index;
using gf::Scalar;
using gf::Vector;

namespace {


std::vector<Vector> independent(const std::vector<Vector>& vs, Index n, Scalar p) {
  gf::SpanBuilder span(n, p);
  for (const auto& v : vs) span.insert(v);
  return span.generators();
}

std::vector<Partition> up_set(const Partition& lambda) {
  std::vector<Partition> out;
  for (auto& mu : partitions_of(lambda.degree()))
    if (dominates(mu, lambda)) out.push_back(std::move(mu));
  return out;
}

}  // namespace

EndomorphismAlgebra::EndomorphismAlgebra(std::shared_ptr<const HomSpace> hom, int p, std::size_t end_budget)
    : hom_(std::move(hom)), p_(p) {
  if (hom_->source() != hom_->target().shape()) throw std::invalid_argument("EndomorphismAlgebra: not an End space");
  const std::size_t d = hom_->dimension();
  if (d > end_budget)
    throw BudgetExceeded("End(M^(" + shape().to_string() + ")) has dimension " + std::to_string(d) + ", budget " +
                         std::to_string(end_budget));
  const TabloidSet& tabloids = hom_->target();
  one_ = Vector::Zero(static_cast<Index>(d));
  one_(hom_->orbit_of(0)) = 1;

  // b_B o b_A at R_C counts s in orbit A with g_s^{-1} R_C in orbit B
  std::vector<std::uint32_t> counts(d * d, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> row_size(d * d, 0);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::uint32_t s : hom_->members(a)) {
      const Permutation g = tabloids.coset_representative(tabloids[s]);
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t b = hom_->orbit_of(tabloids.rank(act_inverse(g, hom_->representative(c))));
        const std::size_t key = b * d + c;
        if (counts[key]++ == 0) touched.push_back(static_cast<std::uint32_t>(key));
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t key : touched) {
      const Scalar v = counts[key] % p_;
      counts[key] = 0;
      if (!v) continue;
      ++row_size[a * d + key / d];
      targets_.push_back(static_cast<std::uint32_t>(key % d));
      coefficients_.push_back(v);
    }
    touched.clear();
  }
  offsets_.assign(d * d + 1, 0);
  for (std::size_t k = 0; k < d * d; ++k) offsets_[k + 1] = offsets_[k] + row_size[k];
}

Vector EndomorphismAlgebra::multiply(const Vector& x, const Vector& y) const {
  const auto d = static_cast<std::size_t>(dimension());
  std::vector<std::size_t> nx;
  for (std::size_t b = 0; b < d; ++b)
    if (x(b)) nx.push_back(b);
  Vector out = Vector::Zero(static_cast<Index>(d));
  for (std::size_t a = 0; a < d; ++a) {
    const Scalar ya = y(a);
    if (!ya) continue;
    for (std::size_t b : nx) {
      const Scalar f = ya * x(b) % p_;
      const std::size_t k = a * d + b;
      for (std::uint32_t e = offsets_[k]; e < offsets_[k + 1]; ++e) out(targets_[e]) += f * coefficients_[e];
    }
  }
  return gf::reduce(out, p_);
}

FiniteAlgebra EndomorphismAlgebra::to_dense() const {
  const Index d = dimension();
  std::vector<gf::Matrix> left(d, gf::Matrix(d, d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) left[i].col(j) = multiply(Vector::Unit(d, i), Vector::Unit(d, j));
  return FiniteAlgebra(p_, std::move(left), one_);
}

int DecompositionRecord::multiplicity(const Partition& mu) const {
  for (const auto& s : summands)
    if (s.label == mu) return s.multiplicity;
  return 0;
}

std::size_t DecompositionRecord::total_dimension() const {
  std::size_t total = 0;
  for (const auto& s : summands) total += s.dimension * static_cast<std::size_t>(s.multiplicity);
  return total;
}

int LabelTable::multiplicity(const Partition& lambda, const Partition& mu) const {
  for (const auto& row : rows)
    if (row.lambda == lambda) return row.multiplicity(mu);
  throw std::out_of_range("LabelTable: no row for " + lambda.to_string());
}

struct YoungOracle::ModuleData {
  std::shared_ptr<const HomSpace> hom;
  std::unique_ptr<EndomorphismAlgebra> algebra;
  std::optional<std::vector<Summand>> summands;
  std::vector<std::vector<std::size_t>> classes;  // isomorphism classes of summands
  std::vector<Partition> class_label;
  bool clustered = false;
  bool labelled = false;
};

YoungOracle::YoungOracle(int p, OracleOptions options) : p_(p), options_(options) {
  if (!is_prime(p)) throw std::invalid_argument("YoungOracle: " + std::to_string(p) + " is not prime");
  if (p >= 256) throw std::invalid_argument("YoungOracle: primes above 255 are not supported");
}

YoungOracle::~YoungOracle() = default;

std::mt19937_64 YoungOracle::rng_for(const Partition& lambda, std::uint64_t salt) const {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(options_.seed), static_cast<std::uint32_t>(options_.seed >> 32),
                                   static_cast<std::uint32_t>(p_), static_cast<std::uint32_t>(salt)};
  for (int part : lambda.parts()) words.push_back(static_cast<std::uint32_t>(part));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

std::shared_ptr<const TabloidSet> YoungOracle::tabloids_ptr(const Partition& lambda) {
  auto it = tabloids_.find(lambda);
  if (it == tabloids_.end()) it = tabloids_.emplace(lambda, std::make_shared<TabloidSet>(lambda, options_.tabloid_budget)).first;
  return it->second;
}

std::shared_ptr<const HomSpace> YoungOracle::hom_space(const Partition& lambda, const Partition& nu) {
  std::lock_guard lock(mutex_);
  tabloids_ptr(lambda);  // budget check for the source as well
  return hom_locked(lambda, nu);
}

// Orbit sums only need the target tabloids, so probes such as (1^r) are
// fine whatever their own size.
std::shared_ptr<const HomSpace> YoungOracle::hom_locked(const Partition& lambda, const Partition& nu) {
  auto key = std::make_pair(lambda, nu);
  auto it = homs_.find(key);
  if (it == homs_.end())
    it = homs_.emplace(key, std::make_shared<HomSpace>(lambda, tabloids_ptr(nu), options_.reverse_basis)).first;
  return it->second;
}

const CompositionTable& YoungOracle::composition(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  auto key = std::make_tuple(alpha, beta, gamma);
  auto it = tables_.find(key);
  if (it == tables_.end()) {
    auto ab = hom_locked(alpha, beta), bg = hom_locked(beta, gamma), ag = hom_locked(alpha, gamma);
    it = tables_.emplace(key, std::make_unique<CompositionTable>(*ab, *bg, *ag)).first;
  }
  return *it->second;
}

YoungOracle::ModuleData& YoungOracle::module(const Partition& lambda) {
  auto it = modules_.find(lambda);
  if (it != modules_.end()) return *it->second;
  auto data = std::make_unique<ModuleData>();
  data->hom = hom_locked(lambda, lambda);
  data->algebra = std::make_unique<EndomorphismAlgebra>(data->hom, p_, options_.end_budget);
  return *modules_.emplace(lambda, std::move(data)).first->second;
}

const EndomorphismAlgebra& YoungOracle::endomorphisms(const Partition& lambda) {
  std::lock_guard lock(mutex_);
  return *module(lambda).algebra;
}

std::vector<Summand>& YoungOracle::summands_locked(const Partition& lambda) {
  ModuleData& m = module(lambda);
  if (!m.summands) {
    const EndomorphismAlgebra& a = *m.algebra;
    auto rng = rng_for(lambda, 1);
    SplitOptions opt{1, options_.max_split_attempts, options_.max_dense_corner};
    auto idempotents = primitive_idempotents(a, a.one(), rng, opt);
    Vector sum = Vector::Zero(a.dimension());
    for (const auto& q : idempotents) sum += q.element;
    if (gf::reduce(sum, p_) != a.one()) throw std::logic_error("primitive idempotents do not sum to 1");
    std::vector<Summand> out;
    for (auto& q : idempotents) out.push_back(Summand{std::move(q), {}, std::nullopt});
    m.summands = std::move(out);
  }
  return *m.summands;
}

const std::vector<Summand>& YoungOracle::summands(const Partition& lambda) {
  std::lock_guard lock(mutex_);
  return summands_locked(lambda);
}

std::size_t YoungOracle::fixed_points(const Partition& lambda, std::size_t index, const Partition& alpha) {
  Summand& s = summands_locked(lambda)[index];
  if (auto it = s.fixed_points.find(alpha); it != s.fixed_points.end()) return it->second;
  // rank of { e o h : h in Hom(M^alpha, M^lambda) }
  const CompositionTable& table = composition(alpha, lambda, lambda);
  const auto images = table.compose_with_basis(s.idempotent.element, p_);
  gf::SpanBuilder span(static_cast<Index>(table.cols()), p_);
  for (const auto& v : images) span.insert(v);
  const auto value = static_cast<std::size_t>(span.rank());
  s.fixed_points.emplace(alpha, value);
  return value;
}

// dim Y^mu = dim M^mu minus the summands of M^mu with strictly more dominant labels
std::size_t YoungOracle::label_dimension(const Partition& mu) {
  if (auto it = dimensions_.find(mu); it != dimensions_.end()) return it->second;
  label(mu);
  const ModuleData& m = module(mu);
  const Natural total = multinomial(mu.as_composition());
  Natural rest = 0;
  for (std::size_t c = 0; c < m.classes.size(); ++c)
    if (m.class_label[c] != mu) rest += Natural(m.classes[c].size()) * label_dimension(m.class_label[c]);
  if (rest >= total)
    throw LabelingError("Y^(" + mu.to_string() + ") would have non-positive dimension at p=" + std::to_string(p_));
  const auto value = static_cast<std::size_t>(total - rest);
  dimensions_.emplace(mu, value);
  return value;
}

const std::vector<Vector>& YoungOracle::left_ideal(const Partition& lambda, std::size_t index) {
  Summand& s = summands_locked(lambda)[index];
  if (s.idempotent.left_ideal.empty()) {
    const EndomorphismAlgebra& a = *module(lambda).algebra;
    const Index d = a.dimension();
    gf::SpanBuilder span(d, p_);
    for (Index k = 0; k < d; ++k) span.insert(a.multiply(Vector::Unit(d, k), s.idempotent.element));
    s.idempotent.left_ideal = span.generators();
  }
  return s.idempotent.left_ideal;
}

const gf::SpanBuilder& YoungOracle::corner_span(const Partition& lambda, std::size_t index) {
  Summand& s = summands_locked(lambda)[index];
  if (!s.corner_span) {
    gf::SpanBuilder span(module(lambda).algebra->dimension(), p_, true);
    for (const auto& b : s.idempotent.corner_basis)
      if (!span.insert(b)) throw std::logic_error("corner basis is not independent");
    s.corner_span = std::move(span);
  }
  return *s.corner_span;
}

Scalar YoungOracle::residue(const Partition& lambda, std::size_t index, const Vector& x) {
  const auto coords = corner_span(lambda, index).coordinates(x);
  if (!coords) throw std::logic_error("element is not in the corner algebra");
  return summands_locked(lambda)[index].idempotent.certificate.apply(*coords, p_);
}

bool YoungOracle::isomorphic_within(const Partition& lambda, std::size_t i, std::size_t j) {
  if (i == j) return true;
  const EndomorphismAlgebra& a = *module(lambda).algebra;
  const auto& list = summands_locked(lambda);
  const Vector& ei = list[i].idempotent.element;
  const Vector& ej = list[j].idempotent.element;
  // U_i = U_j iff some y in e_i A e_j and x in e_j A e_i have y x invertible in e_i A e_i
  std::vector<Vector> xs, ys;
  for (const auto& w : left_ideal(lambda, i)) xs.push_back(a.multiply(ej, w));
  for (const auto& w : left_ideal(lambda, j)) ys.push_back(a.multiply(ei, w));
  xs = independent(xs, a.dimension(), p_);
  ys = independent(ys, a.dimension(), p_);
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (residue(lambda, i, a.multiply(y, x)) != 0) return true;
  return false;
}

bool YoungOracle::isomorphic_across(const Partition& lambda, std::size_t i, const Partition& nu, std::size_t j) {
  const Vector& e = summands_locked(lambda)[i].idempotent.element;
  const Vector& f = summands_locked(nu)[j].idempotent.element;
  const auto n_lambda_nu = static_cast<Index>(hom_space(lambda, nu)->dimension());
  const auto n_nu_lambda = static_cast<Index>(hom_space(nu, lambda)->dimension());

  // X spans f Hom(M^lambda, M^nu) e and Y spans e Hom(M^nu, M^lambda) f
  std::vector<Vector> xs;
  for (const auto& fh : independent(composition(lambda, nu, nu).compose_with_basis(f, p_), n_lambda_nu, p_))
    xs.push_back(composition(lambda, lambda, nu).compose(fh, e, p_));
  xs = independent(xs, n_lambda_nu, p_);
  if (xs.empty()) return false;
  std::vector<Vector> ys;
  for (const auto& ek : independent(composition(nu, lambda, lambda).compose_with_basis(e, p_), n_nu_lambda, p_))
    ys.push_back(composition(nu, nu, lambda).compose(ek, f, p_));
  ys = independent(ys, n_nu_lambda, p_);
  if (ys.empty()) return false;

  const CompositionTable& back = composition(lambda, nu, lambda);
  auto rng = rng_for(lambda, 0x100 + j);
  std::uniform_int_distribution<Scalar> coeff(0, p_ - 1);
  auto combination = [&](const std::vector<Vector>& basis) {
    Vector v = Vector::Zero(basis.front().size());
    for (const auto& b : basis) v += coeff(rng) * b;
    return gf::reduce(v, p_);
  };
  for (int t = 0; t < options_.iso_trials; ++t)
    if (residue(lambda, i, back.compose(combination(ys), combination(xs), p_)) != 0) return true;
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (residue(lambda, i, back.compose(y, x, p_)) != 0) return true;
  return false;
}

bool YoungOracle::isomorphic_locked(const Partition& lambda, std::size_t i, const Partition& nu, std::size_t j) {
  if (lambda.degree() != nu.degree()) return false;
  if (lambda == nu) return isomorphic_within(lambda, i, j);
  return isomorphic_across(lambda, i, nu, j);
}

bool YoungOracle::isomorphic(const Partition& lambda, std::size_t i, const Partition& nu, std::size_t j) {
  std::lock_guard lock(mutex_);
  return isomorphic_locked(lambda, i, nu, j);
}

bool YoungOracle::same_invariants(const Partition& lambda, std::size_t i, const Partition& nu, std::size_t j,
                                  const std::vector<Partition>& alphas) {
  for (const auto& alpha : alphas)
    if (fixed_points(lambda, i, alpha) != fixed_points(nu, j, alpha)) return false;
  return true;
}

void YoungOracle::cluster(const Partition& lambda) {
  ModuleData& m = module(lambda);
  if (m.clustered) return;
  const std::size_t k = summands_locked(lambda).size();
  for (std::size_t i = 0; i < k; ++i) {
    bool placed = false;
    for (auto& cls : m.classes)
      if (isomorphic_within(lambda, cls.front(), i)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed) m.classes.push_back({i});
  }
  m.clustered = true;
}

void YoungOracle::label_step(const Partition& nu) {
  ModuleData& m = module(nu);
  cluster(nu);
  const std::vector<Partition> alphas = up_set(nu);
  std::vector<std::vector<Partition>> matches(m.classes.size());
  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    const std::size_t rep = m.classes[c].front();
    for (const auto& mu : alphas) {
      if (mu == nu) continue;
      const auto it = labels_.find(mu);
      if (it == labels_.end()) throw std::logic_error("label " + mu.to_string() + " missing while labelling " + nu.to_string());
      const Labelled& known = it->second;
      if (!same_invariants(nu, rep, known.module, known.summand, alphas)) continue;
      if (isomorphic_locked(nu, rep, known.module, known.summand)) matches[c].push_back(mu);
    }
  }
  std::vector<std::size_t> unmatched;
  for (std::size_t c = 0; c < matches.size(); ++c)
    if (matches[c].empty()) unmatched.push_back(c);
  bool ambiguous = unmatched.size() != 1 || m.classes[unmatched.front()].size() != 1;
  for (const auto& mc : matches) ambiguous = ambiguous || mc.size() > 1;
  if (ambiguous) {
    std::ostringstream msg;
    msg << "cannot label the summands of M^(" << nu.to_string() << ") at p=" << p_ << ":";
    for (std::size_t c = 0; c < m.classes.size(); ++c) {
      msg << " [class " << c << ": " << m.classes[c].size() << " copies, matches";
      for (const auto& mu : matches[c]) msg << " (" << mu.to_string() << ")";
      msg << "]";
    }
    throw LabelingError(msg.str());
  }
  m.class_label.clear();
  for (std::size_t c = 0; c < matches.size(); ++c) m.class_label.push_back(matches[c].empty() ? nu : matches[c].front());
  labels_.insert_or_assign(nu, Labelled{nu, m.classes[unmatched.front()].front()});
  m.labelled = true;
}

void YoungOracle::label(const Partition& lambda) {
  for (const auto& nu : up_set(lambda))
    if (!module(nu).labelled) label_step(nu);
}

DecompositionRecord YoungOracle::record(const Partition& lambda) {
  label(lambda);
  ModuleData& m = module(lambda);
  DecompositionRecord out;
  out.p = p_;
  out.r = lambda.degree();
  out.lambda = lambda;
  for (std::size_t c = 0; c < m.classes.size(); ++c)
    out.summands.push_back({m.class_label[c], label_dimension(m.class_label[c]),
                            static_cast<int>(m.classes[c].size())});
  std::sort(out.summands.begin(), out.summands.end(), [](const auto& a, const auto& b) { return a.label > b.label; });
  return out;
}

DecompositionRecord YoungOracle::decompose(const Partition& lambda) {
  std::lock_guard lock(mutex_);
  return record(lambda);
}

int YoungOracle::multiplicity(const Partition& lambda, const Partition& mu) {
  if (lambda.degree() != mu.degree()) throw std::invalid_argument("multiplicity: degree mismatch");
  return decompose(lambda).multiplicity(mu);
}

std::optional<int> YoungOracle::try_multiplicity(const Partition& lambda, const Partition& mu) {
  if (!within_budget(lambda)) return std::nullopt;
  try {
    return multiplicity(lambda, mu);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

LabelTable YoungOracle::table(int r) {
  std::lock_guard lock(mutex_);
  LabelTable out;
  out.p = p_;
  out.r = r;
  for (const auto& lambda : partitions_of(r)) out.rows.push_back(record(lambda));
  return out;
}

bool YoungOracle::within_budget(const Partition& lambda) const {
  for (const auto& nu : up_set(lambda)) {
    if (multinomial(nu.as_composition()) > options_.tabloid_budget) return false;
    if (count_contingency_matrices(nu, nu) > options_.end_budget) return false;
  }
  return true;
}

gf::Matrix YoungOracle::summand_basis(const Partition& lambda, std::size_t index) {
  std::lock_guard lock(mutex_);
  const Summand& s = summands_locked(lambda)[index];
  ModuleData& m = module(lambda);
  const gf::Matrix map = m.hom->map_matrix(s.idempotent.element, m.hom->target(), p_);
  return gf::row_echelon(map.transpose(), p_).rows.transpose();
}

}  // namespace pkostka
