#include "lexcut/simplex.hpp"

namespace lexcut {

ExactLp::ExactLp(QVector objective) : n_(objective.size()), obj_(std::move(objective)) {
  if (n_ == 0) throw DimensionMismatch("LP needs at least one variable");
  asign_.resize(n_);
  for (size_t i = 0; i < n_; ++i) asign_[i] = obj_[i] >= 0 ? 1 : -1;
}

void ExactLp::add_ge(QVector coeffs, Rational rhs) {
  if (coeffs.size() != n_) throw DimensionMismatch("row length must equal variable count");
  g_.push_back(std::move(coeffs));
  h_.push_back(std::move(rhs));
  in_basis_.push_back(0);
}

void ExactLp::add_le(const QVector& coeffs, const Rational& rhs) {
  add_ge(negate(coeffs), -rhs);
}

void ExactLp::add_eq(const QVector& coeffs, const Rational& rhs) {
  add_ge(coeffs, rhs);
  add_le(coeffs, rhs);
}

Rational ExactLp::column_entry(long b, size_t i) const {
  if (is_artificial(b)) {
    size_t row = static_cast<size_t>(b - kArtificial);
    return i == row ? Rational(asign_[row]) : Rational(0);
  }
  return g_[static_cast<size_t>(b)][i];
}

QVector ExactLp::binv_times_column(long b) const {
  QVector d(n_, Rational(0));
  if (is_artificial(b)) {
    size_t row = static_cast<size_t>(b - kArtificial);
    for (size_t i = 0; i < n_; ++i) d[i] = Rational(asign_[row]) * binv_[i][row];
    return d;
  }
  const QVector& col = g_[static_cast<size_t>(b)];
  for (size_t i = 0; i < n_; ++i) {
    Rational s = 0;
    for (size_t t = 0; t < n_; ++t)
      if (col[t] != 0) s += binv_[i][t] * col[t];
    d[i] = s;
  }
  return d;
}

QVector ExactLp::basic_values() const {
  QVector y(n_, Rational(0));
  for (size_t i = 0; i < n_; ++i) {
    Rational s = 0;
    for (size_t t = 0; t < n_; ++t)
      if (obj_[t] != 0) s += binv_[i][t] * obj_[t];
    y[i] = s;
  }
  return y;
}

Rational ExactLp::weight(long b, int phase) const {
  if (phase == 1) return is_artificial(b) ? Rational(-1) : Rational(0);
  return is_artificial(b) ? Rational(0) : h_[static_cast<size_t>(b)];
}

QVector ExactLp::multipliers(int phase) const {
  QVector pi(n_, Rational(0));
  for (size_t i = 0; i < n_; ++i) {
    Rational w = weight(basis_[i], phase);
    if (w == 0) continue;
    for (size_t t = 0; t < n_; ++t) pi[t] += w * binv_[i][t];
  }
  return pi;
}

void ExactLp::pivot(size_t row, long entering, const QVector& d) {
  Rational pe_inv = 1 / d[row];
  for (size_t t = 0; t < n_; ++t) binv_[row][t] *= pe_inv;
  for (size_t i = 0; i < n_; ++i) {
    if (i == row || d[i] == 0) continue;
    for (size_t t = 0; t < n_; ++t) binv_[i][t] -= d[i] * binv_[row][t];
  }
  if (!is_artificial(basis_[row])) in_basis_[static_cast<size_t>(basis_[row])] = 0;
  basis_[row] = entering;
  if (!is_artificial(entering)) in_basis_[static_cast<size_t>(entering)] = 1;
}

void ExactLp::init_artificial_basis() {
  basis_.assign(n_, 0);
  binv_.assign(n_, QVector(n_, Rational(0)));
  for (size_t i = 0; i < n_; ++i) {
    basis_[i] = kArtificial + static_cast<long>(i);
    binv_[i][i] = Rational(asign_[i]);
  }
  std::fill(in_basis_.begin(), in_basis_.end(), 0);
}

bool ExactLp::run_phase(int phase, long pivot_cap, long& pivots) {
  const size_t m = g_.size();
  for (;;) {
    if (++pivots > pivot_cap) throw IterationLimit("simplex pivot cap exceeded");
    QVector pi = multipliers(phase);
    long entering = -1;
    Rational rc;
    for (size_t j = 0; j < m; ++j) {
      if (in_basis_[j]) continue;
      Rational r = (phase == 1 ? Rational(0) : h_[j]);
      const QVector& col = g_[j];
      for (size_t t = 0; t < n_; ++t)
        if (col[t] != 0) r -= pi[t] * col[t];
      if (r > 0) {  // Bland: first improving column
        entering = static_cast<long>(j);
        rc = r;
        break;
      }
    }
    if (entering < 0) return true;

    QVector d = binv_times_column(entering);
    QVector y = basic_values();
    long row = -1;
    Rational best_ratio;
    for (size_t i = 0; i < n_; ++i) {
      bool art = is_artificial(basis_[i]);
      Rational ratio;
      if (phase == 2 && art) {
        // Artificials must stay at zero once phase 1 is done.
        if (d[i] == 0) continue;
        ratio = 0;
      } else {
        if (d[i] <= 0) continue;
        ratio = y[i] / d[i];
      }
      if (row < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[static_cast<size_t>(row)])) {
        row = static_cast<long>(i);
        best_ratio = ratio;
      }
    }
    if (row < 0) return false;  // unbounded improving ray
    pivot(static_cast<size_t>(row), entering, d);
  }
}

void ExactLp::drive_out_artificials() {
  const size_t m = g_.size();
  for (size_t i = 0; i < n_; ++i) {
    if (!is_artificial(basis_[i])) continue;
    for (size_t j = 0; j < m; ++j) {
      if (in_basis_[j]) continue;
      Rational pe = 0;
      const QVector& col = g_[j];
      for (size_t t = 0; t < n_; ++t)
        if (col[t] != 0) pe += binv_[i][t] * col[t];
      if (pe != 0) {
        pivot(i, static_cast<long>(j), binv_times_column(static_cast<long>(j)));
        break;
      }
    }
  }
}

bool ExactLp::primal_feasible(long pivot_cap) const {
  // Farkas check: max h.y over {M y = 0, y >= 0} is unbounded exactly when
  // no x satisfies all rows.
  ExactLp probe(QVector(n_, Rational(0)));
  for (size_t j = 0; j < g_.size(); ++j) probe.add_ge(g_[j], h_[j]);
  probe.init_artificial_basis();
  long pivots = 0;
  return probe.run_phase(2, pivot_cap, pivots);
}

LpResult ExactLp::solve(long pivot_cap) {
  if (known_infeasible_) return {LpStatus::Infeasible, {}, 0};

  long pivots = 0;
  if (!have_basis_) {
    init_artificial_basis();
    if (!run_phase(1, pivot_cap, pivots)) throw Error("phase 1 cannot be unbounded");
    Rational infeas = 0;
    QVector y = basic_values();
    for (size_t i = 0; i < n_; ++i)
      if (is_artificial(basis_[i])) infeas += y[i];
    if (infeas != 0) {
      // Dual infeasible: the primal is empty or unbounded; Farkas decides.
      if (primal_feasible(pivot_cap)) return {LpStatus::Unbounded, {}, 0};
      known_infeasible_ = true;
      return {LpStatus::Infeasible, {}, 0};
    }
    drive_out_artificials();
  }

  if (!run_phase(2, pivot_cap, pivots)) {
    // Dual unbounded certifies an empty primal.
    have_basis_ = false;
    known_infeasible_ = true;
    return {LpStatus::Infeasible, {}, 0};
  }
  have_basis_ = true;
  QVector x = multipliers(2);
  return {LpStatus::Optimal, x, dot(obj_, x)};
}

LpResult solve_lp(const QVector& objective, const std::vector<LinearInequality>& rows) {
  ExactLp lp(objective);
  for (const LinearInequality& r : rows) lp.add_ge(r.coeffs, r.rhs);
  return lp.solve();
}

}  // namespace lexcut
