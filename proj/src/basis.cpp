#include "lexcut/basis.hpp"

namespace lexcut {

LatticeBasis::LatticeBasis(IntMatrix c) : c_(std::move(c)) {
  if (c_.n == 0) throw DimensionMismatch("lattice basis needs dimension >= 1");
  if (!is_unimodular(c_)) throw NotPrimitive("basis matrix is not unimodular");
}

Rational LatticeBasis::product(size_t i, const QVector& x) const {
  if (i < 1 || i > dim()) throw IndexOutOfRange();
  if (x.size() != dim()) throw DimensionMismatch();
  Rational s = 0;
  for (size_t j = 0; j < dim(); ++j) s += Rational(c_.at(i - 1, j)) * x[j];
  return s;
}

QVector LatticeBasis::products(const QVector& x) const {
  QVector p(dim());
  for (size_t i = 1; i <= dim(); ++i) p[i - 1] = product(i, x);
  return p;
}

std::pair<ZVector, Int> gcd_normalize(const ZVector& v) {
  if (is_zero(v)) throw ZeroVector();
  Int g = 0;
  for (const Int& z : v) {
    Int a = abs(z);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  ZVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return {out, g};
}

LatticeBasis complete_basis(const ZVector& c) {
  const size_t n = c.size();
  if (n == 0) throw DimensionMismatch("empty objective");
  if (is_zero(c)) throw ZeroVector();
  {
    auto [prim, g] = gcd_normalize(c);
    if (g != 1) throw NotPrimitive();
  }

  // Column operations U with c * U = e1; then C = U^{-1} has first row c.
  ZVector a = c;
  IntMatrix u = IntMatrix::identity(n);

  auto count_nonzero = [&]() {
    size_t k = 0;
    for (const Int& z : a)
      if (z != 0) ++k;
    return k;
  };
  auto sub_column = [&](size_t j, const Int& q, size_t p) {
    // column_j -= q * column_p
    for (size_t r = 0; r < n; ++r) u.at(r, j) -= q * u.at(r, p);
    a[j] -= q * a[p];
  };

  while (count_nonzero() > 1) {
    size_t p = n;
    for (size_t j = 0; j < n; ++j) {
      if (a[j] == 0) continue;
      if (p == n || abs(a[j]) < abs(a[p])) p = j;
    }
    for (size_t j = 0; j < n; ++j) {
      if (j == p || a[j] == 0) continue;
      // Rounded quotient keeps |remainder| <= |a_p| / 2.
      Rational q(a[j], a[p]);
      sub_column(j, nearest_int(q), p);
    }
  }

  size_t p = 0;
  while (a[p] == 0) ++p;
  if (p != 0) {
    for (size_t r = 0; r < n; ++r) std::swap(u.at(r, 0), u.at(r, p));
    std::swap(a[0], a[p]);
  }
  if (a[0] == -1) {
    for (size_t r = 0; r < n; ++r) u.at(r, 0) = -u.at(r, 0);
    a[0] = -a[0];
  }
  if (a[0] != 1) throw NotPrimitive("column reduction did not reach gcd 1");

  IntMatrix cmat = inverse_unimodular(u);
  LatticeBasis basis(cmat);
  if (basis.row(0) != c) throw Error("basis completion lost the first row");
  return basis;
}

ZVector solve_unimodular(const LatticeBasis& basis, const ZVector& rhs) {
  QVector x = solve_rational(basis.matrix(), to_rational(rhs));
  return to_integer(x);
}

}  // namespace lexcut
