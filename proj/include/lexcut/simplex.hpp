#pragma once

#include <vector>

#include "lexcut/cuts.hpp"

namespace lexcut {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QVector x;       // only for Optimal
  Rational value;  // only for Optimal
};

/// Exact rational LP
///
///   min obj . x   subject to   coeffs_j . x >= rhs_j   (x free)
///
/// solved through the standard-form dual with a two-phase simplex and
/// Bland's rule. Rows may be appended between solve() calls; a previous
/// optimal basis is reused, so constraint-accumulation loops (Kelley,
/// cutting planes) pay only a few pivots per added row.
class ExactLp {
 public:
  explicit ExactLp(QVector objective);

  size_t num_vars() const { return n_; }
  size_t num_rows() const { return g_.size(); }

  void add_ge(QVector coeffs, Rational rhs);
  void add_le(const QVector& coeffs, const Rational& rhs);
  void add_eq(const QVector& coeffs, const Rational& rhs);

  LpResult solve(long pivot_cap = 500000);

 private:
  static constexpr long kArtificial = 1L << 40;
  static bool is_artificial(long b) { return b >= kArtificial; }

  Rational column_entry(long b, size_t i) const;
  QVector binv_times_column(long b) const;
  QVector basic_values() const;
  QVector multipliers(int phase) const;
  Rational weight(long b, int phase) const;
  void pivot(size_t row, long entering, const QVector& d);
  void init_artificial_basis();
  // Returns true when the phase ended Optimal, false on an unbounded ray.
  bool run_phase(int phase, long pivot_cap, long& pivots);
  void drive_out_artificials();
  bool primal_feasible(long pivot_cap) const;

  size_t n_;
  QVector obj_;
  std::vector<QVector> g_;
  QVector h_;
  std::vector<int> asign_;
  std::vector<long> basis_;
  std::vector<QVector> binv_;
  std::vector<char> in_basis_;
  bool have_basis_ = false;
  bool known_infeasible_ = false;
};

/// One-shot convenience wrapper.
LpResult solve_lp(const QVector& objective, const std::vector<LinearInequality>& rows);

}  // namespace lexcut
