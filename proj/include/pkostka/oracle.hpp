#pragma once

// Brute-force decomposition of Young permutation modules over F_p and
// identification of the summands as Young modules.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "pkostka/algebra.hpp"
#include "pkostka/partition.hpp"
#include "pkostka/permutation_module.hpp"

namespace pkostka {

struct OracleOptions {
  std::size_t tabloid_budget = 3000;
  std::size_t end_budget = 1000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// Enumerate the orbit bases of all Hom spaces backwards.
  bool reverse_basis = false;
  /// Randomized iso trials before the exact pairing check.
  int iso_trials = 4;
  int max_split_attempts = 400;
  gf::Index max_dense_corner = 64;
};

class LabelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// End(M^lambda) in the basis of S_lambda-orbit sums on lambda-tabloids, with
/// sparse structure constants. multiply(x, y) is the composite x o y.
class EndomorphismAlgebra {
 public:
  EndomorphismAlgebra(std::shared_ptr<const HomSpace> hom, int p, std::size_t end_budget = SIZE_MAX);

  gf::Index dimension() const { return static_cast<gf::Index>(hom_->dimension()); }
  gf::Scalar prime() const { return p_; }
  const gf::Vector& one() const { return one_; }
  gf::Vector multiply(const gf::Vector& x, const gf::Vector& y) const;

  const HomSpace& hom() const { return *hom_; }
  const Partition& shape() const { return hom_->source(); }
  /// Dense copy (left regular representation); for small algebras.
  FiniteAlgebra to_dense() const;

 private:
  std::shared_ptr<const HomSpace> hom_;
  gf::Scalar p_;
  gf::Vector one_;
  // structure constants of b_B o b_A, indexed by A * d + B
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<gf::Scalar> coefficients_;
};

/// A primitive idempotent e of an algebra together with a basis of eAe
/// (e first) and a certificate that eAe is local.
struct PrimitiveIdempotent {
  gf::Vector element;
  std::vector<gf::Vector> corner_basis;
  LocalCertificate certificate;
  /// Basis of Ae; may be left empty and filled in later.
  std::vector<gf::Vector> left_ideal;
};

struct SplitOptions {
  int quick_attempts = 1;
  int max_attempts = 400;
  gf::Index max_dense = 64;
};

/// Complete set of primitive orthogonal idempotents summing to `start`.
/// Throws std::runtime_error if an idempotent cannot be split or certified
/// within the attempt cap.
template <FiniteDimensionalAlgebra A, class Rng>
std::vector<PrimitiveIdempotent> primitive_idempotents(const A& a, const gf::Vector& start, Rng& rng,
                                                       const SplitOptions& opt) {
  std::vector<PrimitiveIdempotent> out;
  std::vector<gf::Vector> work{start};
  while (!work.empty()) {
    const gf::Vector e = std::move(work.back());
    work.pop_back();
    auto push = [&](std::vector<gf::Vector>& pieces) {
      for (auto& q : pieces) work.push_back(std::move(q));
    };
    bool done = false;
    for (int k = 0; k < opt.quick_attempts && !done; ++k) {
      auto pieces = try_split(a, e, rng);
      if (pieces.size() > 1) {
        push(pieces);
        done = true;
      }
    }
    if (done) continue;
    Corner corner = corner_algebra(a, e, opt.max_dense);
    if (corner.algebra) {
      LocalCertificate cert = certify_local(*corner.algebra);
      if (cert.local) {
        out.push_back({e, corner.basis, std::move(cert), corner.left_ideal});
        continue;
      }
      if (corner.algebra->dimension() < a.dimension()) {
        // finish inside the corner and map back
        auto inner = primitive_idempotents(*corner.algebra, corner.algebra->one(), rng, opt);
        const gf::Scalar p = a.prime();
        auto lift = [&](const gf::Vector& c) {
          gf::Vector v = gf::Vector::Zero(a.dimension());
          for (gf::Index k = 0; k < c.size(); ++k)
            if (c(k)) v += c(k) * corner.basis[k];
          return gf::reduce(v, p);
        };
        for (auto& q : inner) {
          PrimitiveIdempotent mapped{lift(q.element), {}, std::move(q.certificate), {}};
          for (const auto& b : q.corner_basis) mapped.corner_basis.push_back(lift(b));
          out.push_back(std::move(mapped));
        }
        continue;
      }
    }
    for (int k = 0; k < opt.max_attempts && !done; ++k) {
      auto pieces = try_split(a, e, rng);
      if (pieces.size() > 1) {
        push(pieces);
        done = true;
      }
    }
    if (!done)
      throw std::runtime_error("idempotent with corner of dimension " + std::to_string(corner.span.rank()) +
                               " could not be split or certified local");
  }
  return out;
}

/// One indecomposable summand of M^lambda.
struct Summand {
  PrimitiveIdempotent idempotent;
  /// dim Hom(M^alpha, U) for the alphas probed so far.
  std::map<Partition, std::size_t> fixed_points;
  std::optional<gf::SpanBuilder> corner_span;
};

/// One row of the multiplicity table.
struct DecompositionRecord {
  struct Entry {
    Partition label;
    std::size_t dimension = 0;
    int multiplicity = 0;
  };
  int p = 0;
  int r = 0;
  Partition lambda;
  std::vector<Entry> summands;  // descending lexicographic order of labels

  int multiplicity(const Partition& mu) const;
  std::size_t total_dimension() const;
};

struct LabelTable {
  int p = 0;
  int r = 0;
  std::vector<DecompositionRecord> rows;  // descending lexicographic order of lambda
  int multiplicity(const Partition& lambda, const Partition& mu) const;
};

/// Ground-truth p-Kostka numbers from explicit decompositions. Results are
/// cached per instance; public methods are serialized by an internal lock.
class YoungOracle {
 public:
  explicit YoungOracle(int p, OracleOptions options = {});
  YoungOracle(const YoungOracle&) = delete;
  YoungOracle& operator=(const YoungOracle&) = delete;
  ~YoungOracle();

  int prime() const noexcept { return p_; }
  const OracleOptions& options() const noexcept { return options_; }

  /// Labelled decomposition of M^lambda. Throws BudgetExceeded or
  /// LabelingError.
  DecompositionRecord decompose(const Partition& lambda);
  /// [M^lambda : Y^mu]; throws BudgetExceeded.
  int multiplicity(const Partition& lambda, const Partition& mu);
  /// nullopt when a module involved is over budget.
  std::optional<int> try_multiplicity(const Partition& lambda, const Partition& mu);
  LabelTable table(int r);
  /// Whether M^nu fits both budgets for every nu dominating lambda.
  bool within_budget(const Partition& lambda) const;

  /// Unlabelled summands of M^lambda (primitive idempotents of End).
  const std::vector<Summand>& summands(const Partition& lambda);
  const EndomorphismAlgebra& endomorphisms(const Partition& lambda);
  std::shared_ptr<const HomSpace> hom_space(const Partition& lambda, const Partition& nu);
  /// Columns spanning the summand inside M^lambda.
  gf::Matrix summand_basis(const Partition& lambda, std::size_t index);
  /// Exact isomorphism test between summand i of M^lambda and summand j of M^nu.
  bool isomorphic(const Partition& lambda, std::size_t i, const Partition& nu, std::size_t j);

 private:
  struct ModuleData;
  struct Labelled {
    Partition module;
    std::size_t summand;
  };

  ModuleData& module(const Partition& lambda);
  std::vector<Summand>& summands_locked(const Partition& lambda);
  std::shared_ptr<const TabloidSet> tabloids_ptr(const Partition& lambda);
  std::shared_ptr<const HomSpace> hom_locked(const Partition& lambda, const Partition& nu);
  const CompositionTable& composition(const Partition& alpha, const Partition& beta, const Partition& gamma);
  std::size_t fixed_points(const Partition& lambda, std::size_t index, const Partition& alpha);
  std::size_t label_dimension(const Partition& mu);
  const std::vector<gf::Vector>& left_ideal(const Partition& lambda, std::size_t index);
  const gf::SpanBuilder& corner_span(const Partition& lambda, std::size_t index);
  gf::Scalar residue(const Partition& lambda, std::size_t index, const gf::Vector& x);
  bool isomorphic_within(const Partition& lambda, std::size_t i, std::size_t j);
  bool isomorphic_across(const Partition& lambda, std::size_t i, const Partition& nu, std::size_t j);
  bool isomorphic_locked(const Partition& lambda, std::size_t i, const Partition& nu, std::size_t j);
  bool same_invariants(const Partition& lambda, std::size_t i, const Partition& nu, std::size_t j,
                       const std::vector<Partition>& alphas);
  void cluster(const Partition& lambda);
  void label_step(const Partition& nu);
  void label(const Partition& lambda);
  DecompositionRecord record(const Partition& lambda);
  std::mt19937_64 rng_for(const Partition& lambda, std::uint64_t salt) const;

  int p_;
  OracleOptions options_;
  std::recursive_mutex mutex_;
  std::map<Partition, std::shared_ptr<const TabloidSet>> tabloids_;
  std::map<std::pair<Partition, Partition>, std::shared_ptr<const HomSpace>> homs_;
  std::map<std::tuple<Partition, Partition, Partition>, std::unique_ptr<CompositionTable>> tables_;
  std::map<Partition, std::unique_ptr<ModuleData>> modules_;
  std::map<Partition, Labelled> labels_;
  std::map<Partition, std::size_t> dimensions_;
};

}  // namespace pkostka
