#pragma once

#include <vector>

#include "lexcut/lex.hpp"

namespace lexcut {

/// Halfspace coeffs . x >= rhs.
struct LinearInequality {
  QVector coeffs;
  Rational rhs;

  Rational evaluate(const QVector& x) const { return dot(coeffs, x); }
  bool satisfied_by(const QVector& x) const { return evaluate(x) >= rhs; }
  bool operator==(const LinearInequality& other) const = default;
};

/// The k-th lex-cut of a point: d-coefficients plus the x-space inequality
/// sum_i d_i c^i x >= rhs.
struct LexCut {
  size_t k = 0;  // 1-based
  QVector d;     // d_1..d_k
  LinearInequality ineq;
};

/// d-coefficients of the k-th lex-cut of an integer point xbar of K.
QVector lexcut_coeffs(const LatticeBasis& basis, const QVector& xbar, size_t k);

/// The k-th lex-cut of an integer point xbar of K.
LexCut lexcut(const LatticeBasis& basis, const QVector& xbar, size_t k);

/// Cut-step inequality for a (possibly fractional) point: k must be the
/// first index with c^k xbar not integer after snapping; the d's use
/// ceil(c^k xbar) and the rhs keeps the exact prefix products.
/// Equals the k-th lex-cut of round_up_lex(xbar).
LexCut lexcut_frac(const LatticeBasis& basis, const QVector& xbar, size_t k,
                   const Rational& tol = Rational(0));

/// Same, computed from the products vector (c^1 xbar, ..., c^n xbar).
LexCut lexcut_frac_from_products(const LatticeBasis& basis, const QVector& products, size_t k,
                                 const Rational& tol = Rational(0));

/// Extreme points v^1..v^ell of Q(xbar) for a nonzero integer xbar of K.
std::vector<QVector> extreme_points(const LatticeBasis& basis, const QVector& xbar);

/// The 2n-inequality description of Q(xbar): the n lex-cuts plus the n cone
/// inequalities c^i x >= 0. For xbar = 0 returns the cone inequalities only.
/// With trim = true, drops the k-th lex-cut when c^k xbar = 0 and the cone
/// inequality c^1 x >= 0 when c^1 xbar > 0.
std::vector<LinearInequality> q_description(const LatticeBasis& basis, const QVector& xbar,
                                            bool trim = false);

}  // namespace lexcut
