#include "lexcut/lex.hpp"

namespace lexcut {

Ordering lex_cmp(const LatticeBasis& basis, const QVector& x, const QVector& y) {
  if (x.size() != basis.dim() || y.size() != basis.dim()) throw DimensionMismatch();
  for (size_t i = 1; i <= basis.dim(); ++i) {
    Rational px = basis.product(i, x);
    Rational py = basis.product(i, y);
    if (px < py) return Ordering::Less;
    if (px > py) return Ordering::Greater;
  }
  return Ordering::Equal;
}

size_t leading_index(const LatticeBasis& basis, const QVector& x) {
  QVector p = basis.products(x);
  if (is_zero(p)) throw ZeroPoint();
  size_t ell = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw OutsideCone();
    if (p[i] > 0) ell = i + 1;
  }
  return ell;
}

QVector snap_products(const QVector& products, const Rational& tol) {
  if (tol == 0) return products;
  QVector out = products;
  for (Rational& q : out) {
    if (int_distance(q) <= tol) q = Rational(nearest_int(q));
  }
  return out;
}

bool products_integral(const QVector& products, const Rational& tol) {
  for (const Rational& q : products) {
    if (tol == 0 ? !is_integer(q) : int_distance(q) > tol) return false;
  }
  return true;
}

ZVector round_up_products(const QVector& products, const Rational& tol) {
  QVector p = snap_products(products, tol);
  const size_t n = p.size();
  for (const Rational& q : p)
    if (q < 0) throw OutsideCone();
  size_t k = n;  // first fractional index (0-based); n if none
  for (size_t i = 0; i < n; ++i) {
    if (!is_integer(p[i])) {
      k = i;
      break;
    }
  }
  ZVector up(n, Int(0));
  if (k == n) {
    for (size_t i = 0; i < n; ++i) up[i] = p[i].get_num();
    return up;
  }
  for (size_t i = 0; i < k; ++i) up[i] = p[i].get_num();
  up[k] = rat_ceil(p[k]);
  return up;
}

QVector round_up_lex(const LatticeBasis& basis, const QVector& x, const Rational& tol) {
  ZVector up = round_up_products(basis.products(x), tol);
  return to_rational(solve_unimodular(basis, up));
}

}  // namespace lexcut
