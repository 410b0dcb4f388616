#include "lexcut/matrix.hpp"

#include <utility>

namespace lexcut {

IntMatrix::IntMatrix(size_t dim, ZVector e) : n(dim), entries(std::move(e)) {
  if (entries.size() != n * n) throw DimensionMismatch("matrix entries do not form an n-by-n grid");
}

IntMatrix IntMatrix::identity(size_t dim) {
  IntMatrix m(dim);
  for (size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<ZVector>& rows) {
  IntMatrix m(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix rows must all have length n");
    for (size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ZVector IntMatrix::row(size_t i) const {
  ZVector r(n);
  for (size_t j = 0; j < n; ++j) r[j] = at(i, j);
  return r;
}

Int det_integer(const IntMatrix& m) {
  const size_t n = m.n;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

Int det_cofactor(const IntMatrix& m) {
  const size_t n = m.n;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int s = 0;
  for (size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1);
    for (size_t i = 1; i < n; ++i) {
      size_t cj = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cj++) = m.at(i, c);
      }
    }
    Int term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

namespace {

// Gauss-Jordan with partial (first nonzero) pivoting over the rationals.
// aug has m.n rows and `cols` columns; on return the left block is the
// identity and the remaining columns hold the solution(s).
void gauss_jordan(std::vector<QVector>& aug, size_t n, size_t cols) {
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && aug[p][k] == 0) ++p;
    if (p == n) throw Error("matrix is singular");
    std::swap(aug[k], aug[p]);
    Rational inv = 1 / aug[k][k];
    for (size_t j = k; j < cols; ++j) aug[k][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || aug[i][k] == 0) continue;
      Rational f = aug[i][k];
      for (size_t j = k; j < cols; ++j) aug[i][j] -= f * aug[k][j];
    }
  }
}

}  // namespace

QVector solve_rational(const IntMatrix& m, const QVector& rhs) {
  const size_t n = m.n;
  if (rhs.size() != n) throw DimensionMismatch("rhs length must equal matrix dimension");
  std::vector<QVector> aug(n, QVector(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = Rational(m.at(i, j));
    aug[i][n] = rhs[i];
  }
  gauss_jordan(aug, n, n + 1);
  QVector x(n);
  for (size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const size_t n = m.n;
  std::vector<QVector> aug(n, QVector(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = Rational(m.at(i, j));
    aug[i][n + i] = 1;
  }
  gauss_jordan(aug, n, 2 * n);
  IntMatrix inv(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const Rational& q = aug[i][n + j];
      if (!is_integer(q)) throw Error("matrix inverse is not integer; input was not unimodular");
      inv.at(i, j) = q.get_num();
    }
  }
  return inv;
}

}  // namespace lexcut
