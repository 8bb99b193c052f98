#pragma once

// Finite-dimensional associative algebras over F_p: radical, idempotent
// lifting and splitting, corners, locality certificates.

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pkostka/gf.hpp"

namespace pkostka {

template <class A>
concept FiniteDimensionalAlgebra = requires(const A& a, const gf::Vector& x) {
  { a.dimension() } -> std::convertible_to<gf::Index>;
  { a.prime() } -> std::convertible_to<gf::Scalar>;
  { a.multiply(x, x) } -> std::convertible_to<gf::Vector>;
  { a.one() } -> std::convertible_to<gf::Vector>;
};

/// Algebra given by its left regular representation: left(i) is the matrix
/// of y -> b_i y in the basis b_0..b_{n-1}.
class FiniteAlgebra {
 public:
  FiniteAlgebra(gf::Scalar p, std::vector<gf::Matrix> left, gf::Vector one);

  gf::Index dimension() const { return static_cast<gf::Index>(left_.size()); }
  gf::Scalar prime() const { return p_; }
  const gf::Vector& one() const { return one_; }
  const gf::Matrix& left(gf::Index i) const { return left_[i]; }
  gf::Matrix left_matrix(const gf::Vector& x) const;
  gf::Vector multiply(const gf::Vector& x, const gf::Vector& y) const;

 private:
  gf::Scalar p_;
  std::vector<gf::Matrix> left_;
  gf::Vector one_;
};

/// Group algebra F_p[G] from a multiplication table on {0..|G|-1}; the
/// identity must be element 0.
FiniteAlgebra group_algebra(gf::Scalar p, const std::vector<std::vector<int>>& table);
/// Algebra of upper triangular n x n matrices (basis E_ij, i <= j).
FiniteAlgebra upper_triangular_algebra(gf::Scalar p, int n);
/// Full matrix algebra M_n(F_p).
FiniteAlgebra matrix_algebra(gf::Scalar p, int n);

/// Jacobson radical, columns spanning J(A). Uses the iterated p-power trace
/// forms: I_{-1} = A and I_i = { a in I_{i-1} : g_i(ab) = 0 for all b },
/// g_i(a) = (Tr(lift(a)^{p^i}) mod p^{i+1}) / p^i, stopping at
/// i = floor(log_p dim A).
gf::Matrix radical(const FiniteAlgebra& a);

/// A / I for a two-sided ideal I (columns of `ideal`), on the complement of
/// the ideal's pivot coordinates.
FiniteAlgebra quotient(const FiniteAlgebra& a, const gf::Matrix& ideal);

/// True iff A / J(A) is one-dimensional.
bool is_local(const FiniteAlgebra& a);

/// Smallest power of p that is at least n.
std::uint64_t p_power_at_least(gf::Scalar p, gf::Index n);

template <FiniteDimensionalAlgebra A>
gf::Vector power(const A& a, gf::Vector x, std::uint64_t e) {
  gf::Vector out = a.one();
  while (e) {
    if (e & 1) out = a.multiply(out, x);
    e >>= 1;
    if (e) x = a.multiply(x, x);
  }
  return out;
}

/// x^q for the least p-power q >= bound: the semisimple part of x raised to
/// a Frobenius power, which is again semisimple.
template <FiniteDimensionalAlgebra A>
gf::Vector frobenius_stable(const A& a, gf::Vector x, gf::Index bound) {
  const gf::Scalar p = a.prime();
  for (std::uint64_t q = 1; q < static_cast<std::uint64_t>(bound); q *= p) x = power(a, x, p);
  return x;
}

/// Coefficients c_0..c_d (low to high, monic) of the minimal polynomial of z
/// inside a corner whose identity is `unit`.
template <FiniteDimensionalAlgebra A>
std::vector<gf::Scalar> minimal_polynomial(const A& a, const gf::Vector& z, const gf::Vector& unit) {
  const gf::Scalar p = a.prime();
  gf::SpanBuilder krylov(a.dimension(), p, true);
  gf::Vector w = unit;
  while (krylov.insert(w)) w = a.multiply(w, z);
  const gf::Vector c = *krylov.coordinates(w);
  std::vector<gf::Scalar> out(c.size() + 1);
  for (gf::Index i = 0; i < c.size(); ++i) out[i] = gf::mod(-c(i), p);
  out.back() = 1;
  return out;
}

/// h(z) with z^0 read as `unit`.
template <FiniteDimensionalAlgebra A>
gf::Vector evaluate(const A& a, const std::vector<gf::Scalar>& h, const gf::Vector& z, const gf::Vector& unit) {
  const gf::Scalar p = a.prime();
  gf::Vector acc = gf::Vector::Zero(a.dimension());
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    acc = a.multiply(acc, z);
    acc = (acc + *it * unit).unaryExpr([p](gf::Scalar v) { return gf::mod(v, p); });
  }
  return acc;
}

/// Splits the idempotent e along the eigenspaces of the semisimple element
/// z of eAe: one idempotent per root of the minimal polynomial in F_p plus
/// the remainder. Returns {e} when nothing splits.
template <FiniteDimensionalAlgebra A>
std::vector<gf::Vector> split_by_element(const A& a, const gf::Vector& e, const gf::Vector& z) {
  const gf::Scalar p = a.prime();
  const auto m = minimal_polynomial(a, z, e);
  if (m.size() <= 2) return {e};
  std::vector<gf::Vector> pieces;
  gf::Vector rest = e;
  for (gf::Scalar c = 0; c < p; ++c) {
    // synthetic division by (t - c)
    std::vector<gf::Scalar> h(m.size() - 1);
    gf::Scalar carry = 0;
    for (std::size_t i = m.size() - 1; i >= 1; --i) {
      carry = gf::mod(m[i] + carry * c, p);
      h[i - 1] = carry;
    }
    if (gf::mod(m[0] + carry * c, p) != 0) continue;
    gf::Scalar hc = 0;
    for (auto it = h.rbegin(); it != h.rend(); ++it) hc = gf::mod(hc * c + *it, p);
    const gf::Scalar scale = gf::inverse(hc, p);
    gf::Vector piece = evaluate(a, h, z, e).unaryExpr([&](gf::Scalar v) { return v * scale % p; });
    if (a.multiply(piece, piece) != piece) throw std::logic_error("split_by_element: element is not semisimple");
    rest = (rest - piece).unaryExpr([p](gf::Scalar v) { return gf::mod(v, p); });
    pieces.push_back(std::move(piece));
  }
  if (!rest.isZero()) pieces.push_back(rest);
  if (pieces.size() < 2) return {e};
  return pieces;
}

template <class Rng>
gf::Vector random_vector(gf::Index n, gf::Scalar p, Rng& rng) {
  std::uniform_int_distribution<gf::Scalar> dist(0, p - 1);
  gf::Vector v(n);
  for (gf::Index i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

/// One randomized splitting attempt of e using x = e y e for random y.
template <FiniteDimensionalAlgebra A, class Rng>
std::vector<gf::Vector> try_split(const A& a, const gf::Vector& e, Rng& rng) {
  const gf::Vector y = random_vector(a.dimension(), a.prime(), rng);
  const gf::Vector x = a.multiply(a.multiply(e, y), e);
  return split_by_element(a, e, frobenius_stable(a, x, a.dimension()));
}

/// Newton iteration e <- 3e^2 - 2e^3 (which is e <- e^2 when p = 2). Starts
/// from an element that is idempotent modulo a nilpotent ideal; returns
/// nullopt if no idempotent is reached within `max_iterations`.
template <FiniteDimensionalAlgebra A>
std::optional<gf::Vector> lift_idempotent(const A& a, gf::Vector e, int max_iterations) {
  const gf::Scalar p = a.prime();
  for (int it = 0; it <= max_iterations; ++it) {
    const gf::Vector e2 = a.multiply(e, e);
    if (e2 == e) return e;
    const gf::Vector e3 = a.multiply(e2, e);
    e = (3 * e2 - 2 * e3).unaryExpr([p](gf::Scalar v) { return gf::mod(v, p); });
  }
  return std::nullopt;
}

/// eAe as a stand-alone algebra. basis[0] = e; `span` gives coordinates of
/// elements of eAe in that basis; `left_ideal` is a basis of Ae.
struct Corner {
  std::vector<gf::Vector> basis;
  gf::SpanBuilder span;
  std::vector<gf::Vector> left_ideal;
  std::optional<FiniteAlgebra> algebra;
};

/// Builds the corner of e. The structure constants are only computed when
/// dim eAe <= max_dense.
template <FiniteDimensionalAlgebra A>
Corner corner_algebra(const A& a, const gf::Vector& e, gf::Index max_dense) {
  const gf::Index n = a.dimension();
  const gf::Scalar p = a.prime();
  gf::SpanBuilder ae(n, p);
  for (gf::Index i = 0; i < n; ++i) ae.insert(a.multiply(gf::Vector::Unit(n, i), e));
  Corner c{{}, gf::SpanBuilder(n, p, true), ae.generators(), std::nullopt};
  c.span.insert(e);
  for (const auto& w : c.left_ideal) c.span.insert(a.multiply(e, w));
  c.basis = c.span.generators();
  const gf::Index m = c.span.rank();
  if (m > max_dense) return c;
  std::vector<gf::Matrix> left(m, gf::Matrix(m, m));
  for (gf::Index i = 0; i < m; ++i)
    for (gf::Index j = 0; j < m; ++j) {
      auto coords = c.span.coordinates(a.multiply(c.basis[i], c.basis[j]));
      if (!coords) throw std::logic_error("corner_algebra: eAe not closed under multiplication");
      left[i].col(j) = *coords;
    }
  c.algebra.emplace(p, std::move(left), gf::Vector::Unit(m, 0));
  return c;
}

/// Proof that an algebra B is local with residue field F_p: an algebra
/// homomorphism `residue` : B -> F_p whose kernel is nilpotent.
struct LocalCertificate {
  bool local = false;
  gf::Vector residue;  // residue(b_i) for each basis element
  gf::Scalar apply(const gf::Vector& x, gf::Scalar p) const { return gf::mod(residue.dot(x), p); }
};

LocalCertificate certify_local(const FiniteAlgebra& b);

}  // namespace pkostka
