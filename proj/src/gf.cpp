#include "pkostka/gf.hpp"

#include <limits>
#include <stdexcept>

namespace pkostka::gf {

Scalar power(Scalar a, std::uint64_t e, Scalar p) {
  Scalar base = mod(a, p), out = 1 % p;
  while (e) {
    if (e & 1) out = out * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return out;
}

Scalar inverse(Scalar a, Scalar p) {
  a = mod(a, p);
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  Scalar t = 0, new_t = 1, r = p, new_r = a;
  while (new_r) {
    Scalar q = r / new_r;
    std::swap(t, new_t);
    new_t -= q * t;
    std::swap(r, new_r);
    new_r -= q * r;
  }
  return mod(t, p);
}

Matrix product_impl(const Matrix& a, const Matrix& b, Scalar p) {
  if (a.cols() != b.rows()) throw std::invalid_argument("product: shape mismatch");
  const Scalar sq = (p - 1) * (p - 1);
  const Index chunk = sq == 0 ? a.cols() : std::max<Index>(1, std::numeric_limits<Scalar>::max() / 2 / sq);
  if (a.cols() <= chunk) return reduce(a * b, p);
  Matrix out = Matrix::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); k += chunk) {
    const Index len = std::min(chunk, a.cols() - k);
    out = reduce(out + reduce(a.middleCols(k, len) * b.middleRows(k, len), p), p);
  }
  return out;
}

Echelon row_echelon_impl(RowMatrix m, Scalar p) {
  m = m.unaryExpr([p](Scalar v) { return mod(v, p); });
  Echelon out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const Scalar inv = inverse(m(row, col), p);
    for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv % p;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) = mod(m(i, j) - f * m(row, j), p);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rows = m.topRows(row);
  return out;
}

Matrix kernel_impl(const Matrix& m, Scalar p) {
  const Echelon ech = row_echelon(m, p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : ech.pivots) is_pivot[c] = true;
  Matrix out = Matrix::Zero(m.cols(), m.cols() - ech.rank());
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(free, k) = 1;
    for (Index r = 0; r < ech.rank(); ++r) out(ech.pivots[r], k) = mod(-ech.rows(r, free), p);
    ++k;
  }
  return out;
}

std::optional<Vector> solve_impl(const Matrix& a, const Vector& b, Scalar p) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Echelon ech = row_echelon(aug, p);
  Vector x = Vector::Zero(a.cols());
  for (Index r = 0; r < ech.rank(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;
    x(ech.pivots[r]) = ech.rows(r, a.cols());
  }
  return x;
}

SpanBuilder::SpanBuilder(Index n, Scalar p, bool track_coordinates) : n_(n), p_(p), track_(track_coordinates) {}

Vector SpanBuilder::reduce_vector(Vector v, Vector* combination) const {
  Scalar* out = v.data();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = out[pivots_[k]];
    if (c == 0) continue;
    const Scalar neg = p_ - c;
    const Scalar* row = rows_[k].data();
    // entries before the pivot are zero in a semi-echelon row
    for (Index j = pivots_[k]; j < n_; ++j)
      if (row[j]) out[j] = (out[j] + neg * row[j]) % p_;
    if (combination) {
      const Vector& ex = expressions_[k];
      Scalar* comb = combination->data();
      for (Index j = 0; j < ex.size(); ++j)
        if (ex(j)) comb[j] = (comb[j] + c * ex(j)) % p_;
    }
  }
  return v;
}

bool SpanBuilder::insert(const Vector& v) {
  if (v.size() != n_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
  const Index k = rank();
  Vector combination = Vector::Zero(k + 1);
  Vector r = reduce_vector(v.unaryExpr([this](Scalar x) { return mod(x, p_); }), track_ ? &combination : nullptr);
  Index pivot = 0;
  while (pivot < n_ && r(pivot) == 0) ++pivot;
  if (pivot == n_) return false;
  const Scalar inv = inverse(r(pivot), p_);
  rows_.push_back(r.unaryExpr([&](Scalar x) { return x * inv % p_; }));
  pivots_.push_back(pivot);
  if (track_) {
    // row = (v - sum combination_j g_j) * inv
    Vector ex = (-combination).unaryExpr([this](Scalar x) { return mod(x, p_); });
    ex(k) = 1;
    expressions_.push_back(ex.unaryExpr([&](Scalar x) { return x * inv % p_; }));
  }
  generators_.push_back(v.unaryExpr([this](Scalar x) { return mod(x, p_); }));
  return true;
}

bool SpanBuilder::contains(const Vector& v) const {
  return reduce_vector(v.unaryExpr([this](Scalar x) { return mod(x, p_); }), nullptr).isZero();
}

std::optional<Vector> SpanBuilder::coordinates(const Vector& v) const {
  if (!track_) throw std::logic_error("SpanBuilder: coordinates requested without tracking");
  Vector combination = Vector::Zero(rank());
  Vector r = reduce_vector(v.unaryExpr([this](Scalar x) { return mod(x, p_); }), &combination);
  if (!r.isZero()) return std::nullopt;
  return combination;
}

Matrix SpanBuilder::basis_matrix() const {
  Matrix out(n_, rank());
  for (Index k = 0; k < rank(); ++k) out.col(k) = generators_[k];
  return out;
}

}  // namespace pkostka::gf
