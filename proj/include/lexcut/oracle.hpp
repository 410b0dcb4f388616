#pragma once

#include <optional>

#include "lexcut/feasible_set.hpp"
#include "lexcut/simplex.hpp"

namespace lexcut {

/// One linear-optimization oracle call: minimize objective over the set
/// intersected with the given equalities and inequalities.
struct LinearQuery {
  QVector objective;
  std::vector<std::pair<QVector, Rational>> equalities;
  std::vector<LinearInequality> inequalities;
};

struct OracleResult {
  bool feasible = false;
  QVector point;
  Rational value;

  static OracleResult infeasible() { return {}; }
  static OracleResult optimal(QVector p, Rational v) { return {true, std::move(p), std::move(v)}; }
};

struct OracleOptions {
  Rational eps = Rational(1, 1000000000);  // ball feasibility tolerance
  long kelley_cap = 10000;                 // tangent cuts per call
};

struct OracleStats {
  long calls = 0;
  long lp_solves = 0;
  long kelley_cuts = 0;
};

/// Exact rational simplex over a bounded polytope.
OracleResult polytope_oracle(const Polytope& p, const LinearQuery& q, OracleStats* stats = nullptr);

/// Exact filter-and-scan; objective ties broken by the standard lex order.
OracleResult pointcloud_oracle(const PointCloud& s, const LinearQuery& q,
                               OracleStats* stats = nullptr);

/// Kelley cutting-plane scheme over ball-intersect-box: outer LP plus
/// accumulated ball tangents, rationally rounded so the ball stays inside.
/// Optimal results have ball violation <= eps; Infeasible is exact.
OracleResult ballbox_oracle(const BallBox& s, const LinearQuery& q, const OracleOptions& opts,
                            OracleStats* stats = nullptr);

/// Dispatch on the set representation.
OracleResult query_oracle(const FeasibleSet& s, const LinearQuery& q, const OracleOptions& opts,
                          OracleStats* stats = nullptr);

/// Checks that a bounded polytope really is bounded (used at instance load).
bool polytope_bounded(const Polytope& p);

}  // namespace lexcut
