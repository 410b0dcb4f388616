#pragma once

#include <variant>
#include <vector>

#include "lexcut/cuts.hpp"

namespace lexcut {

/// Bounded rational polyhedron {x : row.coeffs . x >= row.rhs for all rows}.
struct Polytope {
  std::vector<LinearInequality> rows;
  size_t dim = 0;
};

/// Finite set of rational points.
struct PointCloud {
  std::vector<QVector> points;
  size_t dim = 0;
};

/// {x : lower <= x <= upper, |x - center|^2 <= radius_sq} plus any
/// halfspaces accumulated through restrict_set.
struct BallBox {
  QVector center;
  Rational radius_sq;
  QVector lower;
  QVector upper;
  std::vector<LinearInequality> halfspaces;
};

using FeasibleSet = std::variant<Polytope, PointCloud, BallBox>;

size_t ambient_dim(const FeasibleSet& s);

/// True when oracle answers over this set are exact (everything except BallBox).
bool set_is_exact(const FeasibleSet& s);

/// S intersected with the halfspace h.
FeasibleSet restrict_set(const FeasibleSet& s, const LinearInequality& h);

/// {x - t : x in S} for an integer translation t.
FeasibleSet translate_down(const FeasibleSet& s, const ZVector& t);

/// Exact membership test (the ball inequality is evaluated rationally).
bool contains(const FeasibleSet& s, const QVector& x);

}  // namespace lexcut
