#include "lexcut/cuts.hpp"

namespace lexcut {

namespace {

QVector integral_cone_products(const LatticeBasis& basis, const QVector& xbar) {
  QVector p = basis.products(xbar);
  for (const Rational& q : p) {
    if (!is_integer(q)) throw NonIntegerProducts("xbar must be an integer point");
    if (q < 0) throw OutsideCone();
  }
  return p;
}

QVector d_from_products(const QVector& p, size_t k, const Rational& top) {
  // top is c^k xbar for integer points, ceil(c^k xbar) in the cut step.
  QVector d(k);
  d[k - 1] = 1;
  if (k >= 2) d[k - 2] = top;
  for (size_t idx = k; idx >= 3; --idx) d[idx - 3] = d[idx - 2] * (p[idx - 2] + 1);
  return d;
}

QVector combine_rows(const LatticeBasis& basis, const QVector& d) {
  QVector coeffs(basis.dim(), Rational(0));
  for (size_t i = 0; i < d.size(); ++i) {
    ZVector row = basis.row(i);
    for (size_t j = 0; j < basis.dim(); ++j) coeffs[j] += d[i] * Rational(row[j]);
  }
  return coeffs;
}

}  // namespace

QVector lexcut_coeffs(const LatticeBasis& basis, const QVector& xbar, size_t k) {
  if (k < 1 || k > basis.dim()) throw IndexOutOfRange("k must lie in 1..n");
  QVector p = integral_cone_products(basis, xbar);
  return d_from_products(p, k, p[k - 1]);
}

LexCut lexcut(const LatticeBasis& basis, const QVector& xbar, size_t k) {
  if (k < 1 || k > basis.dim()) throw IndexOutOfRange("k must lie in 1..n");
  QVector p = integral_cone_products(basis, xbar);
  QVector d = d_from_products(p, k, p[k - 1]);
  Rational rhs = 0;
  for (size_t i = 0; i < k; ++i) rhs += d[i] * p[i];
  return LexCut{k, d, LinearInequality{combine_rows(basis, d), rhs}};
}

LexCut lexcut_frac_from_products(const LatticeBasis& basis, const QVector& products, size_t k,
                                 const Rational& tol) {
  if (k < 1 || k > basis.dim()) throw IndexOutOfRange("k must lie in 1..n");
  QVector p = snap_products(products, tol);
  for (const Rational& q : p)
    if (q < 0) throw OutsideCone();
  for (size_t i = 0; i + 1 < k; ++i)
    if (!is_integer(p[i]))
      throw NonIntegerProducts("products before index k must be integer in the cut step");
  Rational top(rat_ceil(p[k - 1]));
  QVector d = d_from_products(p, k, top);
  Rational rhs = top;  // d_k * ceil(c^k xbar)
  for (size_t i = 0; i + 1 < k; ++i) rhs += d[i] * p[i];
  return LexCut{k, d, LinearInequality{combine_rows(basis, d), rhs}};
}

LexCut lexcut_frac(const LatticeBasis& basis, const QVector& xbar, size_t k, const Rational& tol) {
  return lexcut_frac_from_products(basis, basis.products(xbar), k, tol);
}

std::vector<QVector> extreme_points(const LatticeBasis& basis, const QVector& xbar) {
  QVector p = integral_cone_products(basis, xbar);
  if (is_zero(p)) throw ZeroPoint();
  size_t ell = leading_index(basis, xbar);
  std::vector<QVector> vertices;
  vertices.reserve(ell);
  const size_t n = basis.dim();
  for (size_t k = 1; k < ell; ++k) {
    ZVector rhs(n, Int(0));
    for (size_t i = 0; i + 1 < k; ++i) rhs[i] = p[i].get_num();
    rhs[k - 1] = p[k - 1].get_num() + 1;
    vertices.push_back(to_rational(solve_unimodular(basis, rhs)));
  }
  vertices.push_back(xbar);
  return vertices;
}

std::vector<LinearInequality> q_description(const LatticeBasis& basis, const QVector& xbar,
                                            bool trim) {
  QVector p = integral_cone_products(basis, xbar);
  const size_t n = basis.dim();
  std::vector<LinearInequality> out;
  if (!is_zero(p)) {
    for (size_t k = 1; k <= n; ++k) {
      if (trim && p[k - 1] == 0) continue;  // the cut is just c^k x >= 0
      out.push_back(lexcut(basis, xbar, k).ineq);
    }
  }
  for (size_t i = 1; i <= n; ++i) {
    if (trim && i == 1 && p[0] > 0) continue;  // dominated by the first lex-cut
    out.push_back(LinearInequality{to_rational(basis.row(i - 1)), Rational(0)});
  }
  return out;
}

}  // namespace lexcut
