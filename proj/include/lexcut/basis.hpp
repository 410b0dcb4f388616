#pragma once

#include <utility>

#include "lexcut/matrix.hpp"

namespace lexcut {

/// Lattice basis of Z^n: rows c^1..c^n of a unimodular matrix C.
class LatticeBasis {
 public:
  explicit LatticeBasis(IntMatrix c);

  static LatticeBasis identity(size_t n) { return LatticeBasis(IntMatrix::identity(n)); }

  size_t dim() const { return c_.n; }
  const IntMatrix& matrix() const { return c_; }
  ZVector row(size_t i) const { return c_.row(i); }  // 0-based

  /// c^i x for the (1-based) functional index i.
  Rational product(size_t i, const QVector& x) const;

  /// (c^1 x, ..., c^n x).
  QVector products(const QVector& x) const;

  bool operator==(const LatticeBasis& other) const { return c_ == other.c_; }

 private:
  IntMatrix c_;
};

/// Divides v by the gcd of the absolute values of its entries.
/// Returns the primitive vector and the (positive) gcd.
std::pair<ZVector, Int> gcd_normalize(const ZVector& v);

/// Completes a primitive vector c to a lattice basis of Z^n with first row c.
/// Deterministic: extended-gcd column reduction picking the smallest-|value|
/// pivot (leftmost on ties).
LatticeBasis complete_basis(const ZVector& c);

/// Unique x with C x = rhs; integer because C is unimodular.
ZVector solve_unimodular(const LatticeBasis& basis, const ZVector& rhs);

}  // namespace lexcut
