#pragma once

// Dense linear algebra over a prime field F_p. Elements are stored as
// int64 residues in [0, p); every routine returns reduced values.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace pkostka::gf {

using Scalar = std::int64_t;
using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Scalar mod(Scalar a, Scalar p) {
  a %= p;
  return a < 0 ? a + p : a;
}

Scalar power(Scalar a, std::uint64_t e, Scalar p);
/// Multiplicative inverse; throws std::domain_error for a = 0 mod p.
Scalar inverse(Scalar a, Scalar p);

template <typename Derived>
Matrix reduce(const Eigen::MatrixBase<Derived>& m, Scalar p) {
  return m.unaryExpr([p](Scalar v) { return mod(v, p); });
}

Matrix product_impl(const Matrix& a, const Matrix& b, Scalar p);

/// a * b mod p, safe against int64 overflow for any inner dimension.
template <typename A, typename B>
Matrix product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, Scalar p) {
  return product_impl(Matrix(a), Matrix(b), p);
}

struct Echelon {
  RowMatrix rows;              // reduced row echelon form, zero rows dropped
  std::vector<Index> pivots;   // pivot column of each row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

Echelon row_echelon_impl(RowMatrix m, Scalar p);

template <typename Derived>
Echelon row_echelon(const Eigen::MatrixBase<Derived>& m, Scalar p) {
  return row_echelon_impl(RowMatrix(m), p);
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m, Scalar p) {
  return row_echelon(m, p).rank();
}

Matrix kernel_impl(const Matrix& m, Scalar p);

/// Columns form a basis of { x : m x = 0 }.
template <typename Derived>
Matrix kernel(const Eigen::MatrixBase<Derived>& m, Scalar p) {
  return kernel_impl(Matrix(m), p);
}

std::optional<Vector> solve_impl(const Matrix& a, const Vector& b, Scalar p);

/// Some x with a x = b, if one exists.
template <typename A, typename B>
std::optional<Vector> solve(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, Scalar p) {
  return solve_impl(Matrix(a), Vector(b), p);
}

/// Incrementally maintained basis of a subspace of F_p^n in semi-echelon
/// form. Optionally tracks how each stored row is expressed through the
/// accepted generators so membership queries can return coordinates.
class SpanBuilder {
 public:
  SpanBuilder(Index n, Scalar p, bool track_coordinates = false);

  /// Adds v if it is independent of the current span; returns whether it was.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  /// Coefficients w with v = sum_k w_k generators()[k]; requires tracking.
  std::optional<Vector> coordinates(const Vector& v) const;

  Index rank() const { return static_cast<Index>(generators_.size()); }
  Index ambient_dimension() const { return n_; }
  Scalar prime() const { return p_; }
  /// Accepted vectors, in insertion order.
  const std::vector<Vector>& generators() const { return generators_; }
  /// Generators as the columns of an n x rank matrix.
  Matrix basis_matrix() const;

 private:
  Vector reduce_vector(Vector v, Vector* combination) const;

  Index n_;
  Scalar p_;
  bool track_;
  std::vector<Vector> rows_;
  std::vector<Index> pivots_;
  std::vector<Vector> expressions_;
  std::vector<Vector> generators_;
};

}  // namespace pkostka::gf
