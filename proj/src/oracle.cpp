#include "lexcut/oracle.hpp"

namespace lexcut {

namespace {

bool std_lex_less(const QVector& a, const QVector& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool satisfies_query(const LinearQuery& q, const QVector& x) {
  for (const auto& [coeffs, rhs] : q.equalities)
    if (dot(coeffs, x) != rhs) return false;
  for (const LinearInequality& r : q.inequalities)
    if (!r.satisfied_by(x)) return false;
  return true;
}

void add_query_rows(ExactLp& lp, const LinearQuery& q) {
  for (const LinearInequality& r : q.inequalities) lp.add_ge(r.coeffs, r.rhs);
  for (const auto& [coeffs, rhs] : q.equalities) lp.add_eq(coeffs, rhs);
}

/// Rational s >= sqrt(q), off by at most 1/den(q).
Rational sqrt_upper(const Rational& q) {
  if (q < 0) throw Error("sqrt of negative rational");
  Int ab = q.get_num() * q.get_den();
  Int root;
  mpz_sqrt(root.get_mpz_t(), ab.get_mpz_t());
  if (root * root != ab) root += 1;
  return Rational(root, q.get_den());
}

Rational ball_violation(const BallBox& s, const QVector& x) {
  Rational dist = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    Rational d = x[i] - s.center[i];
    dist += d * d;
  }
  return dist - s.radius_sq;
}

// Tangent coefficients are rounded to denominator 2^40 and the right-hand
// side is slackened upward so the exact ball stays inside the halfspace.
void add_ball_tangent(ExactLp& lp, const BallBox& s, const QVector& x) {
  const Int den = Int(1) << 40;
  QVector v = sub(x, s.center);
  QVector vr(v.size());
  bool all_zero = true;
  for (size_t i = 0; i < v.size(); ++i) {
    vr[i] = Rational(rat_floor(v[i] * Rational(den) + Rational(1, 2)), den);
    vr[i].canonicalize();
    if (vr[i] != 0) all_zero = false;
  }
  if (all_zero) vr = v;

  Rational norm_sq = dot(vr, vr);
  Rational rhs = sqrt_upper(norm_sq * s.radius_sq);  // supporting plane at the radial projection
  if (dot(vr, v) <= rhs) {
    // Rounding ate the cut; fall back to the exact gradient linearization.
    vr = v;
    rhs = (dot(v, v) + s.radius_sq) / 2;
  }
  lp.add_le(vr, rhs + dot(vr, s.center));
}

// When the query equalities pin x completely, membership is decidable
// exactly; rank() returns the pinned point if the system has full rank.
std::optional<std::pair<bool, QVector>> pinned_point(size_t n, const LinearQuery& q) {
  if (q.equalities.size() < n) return std::nullopt;
  std::vector<QVector> rows;
  for (const auto& [coeffs, rhs] : q.equalities) {
    QVector r = coeffs;
    r.push_back(rhs);
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < rows.size(); ++col) {
    size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    Rational inv = 1 / rows[rank][col];
    for (size_t j = col; j <= n; ++j) rows[rank][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (size_t j = col; j <= n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  if (rank < n) return std::nullopt;
  for (size_t i = rank; i < rows.size(); ++i)
    if (rows[i][n] != 0) return std::make_pair(false, QVector{});  // inconsistent
  // Back out the pinned point: after full elimination the first n rows are
  // a permuted identity.
  QVector x(n, Rational(0));
  for (size_t i = 0; i < rank; ++i) {
    size_t lead = n;
    for (size_t j = 0; j < n; ++j)
      if (rows[i][j] != 0) {
        lead = j;
        break;
      }
    if (lead < n) x[lead] = rows[i][n];
  }
  return std::make_pair(true, x);
}

}  // namespace

OracleResult polytope_oracle(const Polytope& p, const LinearQuery& q, OracleStats* stats) {
  if (q.objective.size() != p.dim) throw DimensionMismatch("query dimension mismatch");
  if (stats) {
    ++stats->calls;
    ++stats->lp_solves;
  }
  ExactLp lp(q.objective);
  for (const LinearInequality& r : p.rows) lp.add_ge(r.coeffs, r.rhs);
  add_query_rows(lp, q);
  LpResult res = lp.solve();
  if (res.status == LpStatus::Infeasible) return OracleResult::infeasible();
  if (res.status == LpStatus::Unbounded)
    throw UnboundedQuery("polytope oracle hit an unbounded program; the set is not a polytope");
  return OracleResult::optimal(res.x, res.value);
}

OracleResult pointcloud_oracle(const PointCloud& s, const LinearQuery& q, OracleStats* stats) {
  if (q.objective.size() != s.dim) throw DimensionMismatch("query dimension mismatch");
  if (stats) ++stats->calls;
  const QVector* best = nullptr;
  Rational best_val;
  for (const QVector& pt : s.points) {
    if (!satisfies_query(q, pt)) continue;
    Rational val = dot(q.objective, pt);
    if (!best || val < best_val || (val == best_val && std_lex_less(pt, *best))) {
      best = &pt;
      best_val = val;
    }
  }
  if (!best) return OracleResult::infeasible();
  return OracleResult::optimal(*best, best_val);
}

OracleResult ballbox_oracle(const BallBox& s, const LinearQuery& q, const OracleOptions& opts,
                            OracleStats* stats) {
  const size_t n = s.center.size();
  if (q.objective.size() != n) throw DimensionMismatch("query dimension mismatch");
  if (opts.eps <= 0) throw Error("ball oracle tolerance must be positive");
  if (stats) ++stats->calls;

  if (auto pinned = pinned_point(n, q)) {
    auto& [consistent, x] = *pinned;
    if (!consistent) return OracleResult::infeasible();
    bool ok = contains(FeasibleSet(s), x) && satisfies_query(q, x);
    if (!ok) return OracleResult::infeasible();
    return OracleResult::optimal(x, dot(q.objective, x));
  }

  ExactLp lp(q.objective);
  QVector unit(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    unit[i] = 1;
    lp.add_ge(unit, s.lower[i]);
    lp.add_le(unit, s.upper[i]);
    unit[i] = 0;
  }
  for (const LinearInequality& h : s.halfspaces) lp.add_ge(h.coeffs, h.rhs);
  add_query_rows(lp, q);

  for (long cuts = 0;; ++cuts) {
    if (stats) ++stats->lp_solves;
    LpResult res = lp.solve();
    if (res.status == LpStatus::Infeasible) return OracleResult::infeasible();
    if (res.status == LpStatus::Unbounded) throw UnboundedQuery("ball-box LP cannot be unbounded");
    if (ball_violation(s, res.x) <= opts.eps) return OracleResult::optimal(res.x, res.value);
    if (cuts >= opts.kelley_cap) throw IterationLimit("Kelley tangent cap exceeded");
    if (stats) ++stats->kelley_cuts;
    add_ball_tangent(lp, s, res.x);
  }
}

OracleResult query_oracle(const FeasibleSet& s, const LinearQuery& q, const OracleOptions& opts,
                          OracleStats* stats) {
  if (const auto* p = std::get_if<Polytope>(&s)) return polytope_oracle(*p, q, stats);
  if (const auto* pc = std::get_if<PointCloud>(&s)) return pointcloud_oracle(*pc, q, stats);
  return ballbox_oracle(std::get<BallBox>(s), q, opts, stats);
}

bool polytope_bounded(const Polytope& p) {
  QVector obj(p.dim, Rational(0));
  for (size_t i = 0; i < p.dim; ++i) {
    for (int sign : {1, -1}) {
      obj[i] = sign;
      ExactLp lp(obj);
      for (const LinearInequality& r : p.rows) lp.add_ge(r.coeffs, r.rhs);
      LpResult res = lp.solve();
      if (res.status == LpStatus::Unbounded) return false;
      if (res.status == LpStatus::Infeasible) return true;  // empty sets are bounded
    }
    obj[i] = 0;
  }
  return true;
}

}  // namespace lexcut
