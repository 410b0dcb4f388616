#pragma once

#include <cstddef>
#include <vector>

#include "lexcut/rational.hpp"

namespace lexcut {

/// Square integer matrix, row-major.
struct IntMatrix {
  size_t n = 0;
  ZVector entries;  // n*n, row-major

  IntMatrix() = default;
  explicit IntMatrix(size_t dim) : n(dim), entries(dim * dim, Int(0)) {}
  IntMatrix(size_t dim, ZVector e);

  static IntMatrix identity(size_t dim);
  static IntMatrix from_rows(const std::vector<ZVector>& rows);

  const Int& at(size_t i, size_t j) const { return entries[i * n + j]; }
  Int& at(size_t i, size_t j) { return entries[i * n + j]; }

  ZVector row(size_t i) const;
  bool operator==(const IntMatrix& other) const = default;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
Int det_integer(const IntMatrix& m);

/// Cofactor-expansion determinant; O(n!) reference used by tests.
Int det_cofactor(const IntMatrix& m);

inline bool is_unimodular(const IntMatrix& m) {
  Int d = det_integer(m);
  return d == 1 || d == -1;
}

/// Solves M x = rhs exactly over the rationals. M must be invertible.
QVector solve_rational(const IntMatrix& m, const QVector& rhs);

/// Inverse of an integer matrix with |det| = 1; the result is integer.
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace lexcut
