#include "pkostka/algebra.hpp"

#include <cassert>

namespace pkostka {

using gf::Index;
using gf::Matrix;
using gf::Scalar;
using gf::Vector;

FiniteAlgebra::FiniteAlgebra(Scalar p, std::vector<Matrix> left, Vector one)
    : p_(p), left_(std::move(left)), one_(std::move(one)) {
  const Index n = dimension();
  if (one_.size() != n) throw std::invalid_argument("FiniteAlgebra: identity has wrong length");
  for (const auto& m : left_)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("FiniteAlgebra: bad left multiplication matrix");
}

Matrix FiniteAlgebra::left_matrix(const Vector& x) const {
  Matrix out = Matrix::Zero(dimension(), dimension());
  for (Index i = 0; i < dimension(); ++i)
    if (x(i)) out += x(i) * left_[i];
  return gf::reduce(out, p_);
}

Vector FiniteAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector out = Vector::Zero(dimension());
  for (Index i = 0; i < dimension(); ++i)
    if (x(i)) out += x(i) * (left_[i] * y);
  return gf::reduce(out, p_);
}

FiniteAlgebra group_algebra(Scalar p, const std::vector<std::vector<int>>& table) {
  const Index n = static_cast<Index>(table.size());
  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  for (Index g = 0; g < n; ++g)
    for (Index h = 0; h < n; ++h) left[g](table[g][h], h) = 1;
  return FiniteAlgebra(p, std::move(left), Vector::Unit(n, 0));
}

namespace {

// Basis E_ij enumerated by `index`; product E_ij E_kl = [j == k] E_il.
FiniteAlgebra matrix_unit_algebra(Scalar p, int n, bool upper_only) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i)
    for (int j = upper_only ? i : 0; j < n; ++j) units.emplace_back(i, j);
  const Index d = static_cast<Index>(units.size());
  auto index = [&](int i, int j) {
    for (Index k = 0; k < d; ++k)
      if (units[k] == std::make_pair(i, j)) return k;
    return Index{-1};
  };
  std::vector<Matrix> left(d, Matrix::Zero(d, d));
  Vector one = Vector::Zero(d);
  for (Index a = 0; a < d; ++a) {
    auto [i, j] = units[a];
    if (i == j) one(a) = 1;
    for (Index b = 0; b < d; ++b) {
      auto [k, l] = units[b];
      if (j == k) left[a](index(i, l), b) = 1;
    }
  }
  return FiniteAlgebra(p, std::move(left), one);
}

// Tr(x^e) mod q for an integer matrix with entries in [0, q).
Scalar trace_power(Matrix x, std::uint64_t e, Scalar q) {
  Matrix acc = Matrix::Identity(x.rows(), x.cols());
  while (e) {
    if (e & 1) acc = gf::product(acc, x, q);
    e >>= 1;
    if (e) x = gf::product(x, x, q);
  }
  return gf::mod(acc.trace(), q);
}

}  // namespace

FiniteAlgebra upper_triangular_algebra(Scalar p, int n) { return matrix_unit_algebra(p, n, true); }

FiniteAlgebra matrix_algebra(Scalar p, int n) { return matrix_unit_algebra(p, n, false); }

std::uint64_t p_power_at_least(Scalar p, Index n) {
  std::uint64_t q = 1;
  while (q < static_cast<std::uint64_t>(n)) q *= static_cast<std::uint64_t>(p);
  return q;
}

Matrix radical(const FiniteAlgebra& a) {
  const Index n = a.dimension();
  const Scalar p = a.prime();
  Matrix ideal = Matrix::Identity(n, n);
  int levels = 0;
  for (Index q = p; q <= n; q *= p) ++levels;
  Scalar pi = 1;  // p^i
  for (int i = 0; i <= levels && ideal.cols() > 0; ++i, pi *= p) {
    const Scalar modulus = pi * p;
    Matrix g(n, ideal.cols());
    for (Index k = 0; k < ideal.cols(); ++k) {
      const Matrix la = a.left_matrix(ideal.col(k));
      for (Index j = 0; j < n; ++j) {
        const Matrix x = gf::product(la, a.left(j), p);
        const Scalar t = trace_power(x, static_cast<std::uint64_t>(pi), modulus);
        if (t % pi != 0) throw std::logic_error("radical: trace form not divisible by p^i");
        g(j, k) = t / pi;
      }
    }
    ideal = gf::product(ideal, gf::kernel(g, p), p);
  }
  // tidy the basis
  const gf::Echelon ech = gf::row_echelon(ideal.transpose(), p);
  return ech.rows.transpose();
}

FiniteAlgebra quotient(const FiniteAlgebra& a, const Matrix& ideal) {
  const Index n = a.dimension();
  const Scalar p = a.prime();
  const gf::Echelon ech = gf::row_echelon(ideal.transpose(), p);
  std::vector<bool> is_pivot(n, false);
  for (Index c : ech.pivots) is_pivot[c] = true;
  std::vector<Index> keep;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  auto project = [&](Vector v) {
    for (Index r = 0; r < ech.rank(); ++r) {
      const Scalar c = v(ech.pivots[r]);
      if (c) v = (v - c * ech.rows.row(r).transpose()).unaryExpr([p](Scalar x) { return gf::mod(x, p); });
    }
    Vector out(static_cast<Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) out(k) = v(keep[k]);
    return out;
  };
  const Index m = static_cast<Index>(keep.size());
  std::vector<Matrix> left(m, Matrix(m, m));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      left[i].col(j) = project(a.multiply(Vector::Unit(n, keep[i]), Vector::Unit(n, keep[j])));
  return FiniteAlgebra(p, std::move(left), project(a.one()));
}

bool is_local(const FiniteAlgebra& a) { return a.dimension() - radical(a).cols() == 1; }

LocalCertificate certify_local(const FiniteAlgebra& b) {
  const Index m = b.dimension();
  const Scalar p = b.prime();
  LocalCertificate cert;
  cert.residue = Vector::Zero(m);
  const Vector& one = b.one();
  Index lead = 0;
  while (lead < m && one(lead) == 0) ++lead;
  if (lead == m) return cert;
  const Scalar lead_inv = gf::inverse(one(lead), p);

  // b_i^q must be a scalar multiple of the identity
  for (Index i = 0; i < m; ++i) {
    const Vector z = frobenius_stable(b, Vector::Unit(m, i), m);
    const Scalar c = z(lead) * lead_inv % p;
    if (z != (c * one).unaryExpr([p](Scalar v) { return gf::mod(v, p); })) return cert;
    cert.residue(i) = c;
  }
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (cert.apply(b.left(i).col(j), p) != cert.residue(i) * cert.residue(j) % p) return cert;

  gf::SpanBuilder kernel(m, p);
  for (Index i = 0; i < m; ++i)
    kernel.insert((Vector::Unit(m, i) - cert.residue(i) * one).unaryExpr([p](Scalar v) { return gf::mod(v, p); }));
  const std::vector<Vector> radical_basis = kernel.generators();
  std::vector<Vector> layer = radical_basis;
  while (!layer.empty()) {
    gf::SpanBuilder next(m, p);
    for (const auto& x : radical_basis)
      for (const auto& y : layer) next.insert(b.multiply(x, y));
    if (next.rank() == static_cast<Index>(layer.size())) return cert;
    layer = next.generators();
  }
  cert.local = true;
  return cert;
}

}  // namespace pkostka
