#pragma once

#include "lexcut/basis.hpp"

namespace lexcut {

enum class Ordering { Less, Equal, Greater };

/// Lexicographic comparison of x and y under the basis: decided by the first
/// index i with c^i x != c^i y.
Ordering lex_cmp(const LatticeBasis& basis, const QVector& x, const QVector& y);

inline bool lex_less(const LatticeBasis& basis, const QVector& x, const QVector& y) {
  return lex_cmp(basis, x, y) == Ordering::Less;
}
inline bool lex_geq(const LatticeBasis& basis, const QVector& x, const QVector& y) {
  return lex_cmp(basis, x, y) != Ordering::Less;
}

/// Largest (1-based) index i with c^i x > 0. x must be a nonzero point of K.
size_t leading_index(const LatticeBasis& basis, const QVector& x);

/// Snaps every entry within `tol` of an integer to that integer (tol = 0 is exact).
QVector snap_products(const QVector& products, const Rational& tol);

/// True if all entries are integer after snapping.
bool products_integral(const QVector& products, const Rational& tol);

/// The lex-min integer point of K that is lex->= x. x must lie in K.
/// `tol` is the integrality snapping tolerance used for numeric pipelines.
QVector round_up_lex(const LatticeBasis& basis, const QVector& x, const Rational& tol = Rational(0));

/// round_up_lex expressed on the products vector (c^1 x, ..., c^n x):
/// returns the products of x-up, i.e. the snapped prefix, one ceiling, zeros.
ZVector round_up_products(const QVector& products, const Rational& tol = Rational(0));

}  // namespace lexcut
