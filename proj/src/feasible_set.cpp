#include "lexcut/feasible_set.hpp"

namespace lexcut {

size_t ambient_dim(const FeasibleSet& s) {
  return std::visit(
      [](const auto& v) -> size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BallBox>)
          return v.center.size();
        else
          return v.dim;
      },
      s);
}

bool set_is_exact(const FeasibleSet& s) { return !std::holds_alternative<BallBox>(s); }

FeasibleSet restrict_set(const FeasibleSet& s, const LinearInequality& h) {
  if (h.coeffs.size() != ambient_dim(s)) throw DimensionMismatch("halfspace dimension mismatch");
  if (const auto* p = std::get_if<Polytope>(&s)) {
    Polytope out = *p;
    out.rows.push_back(h);
    return out;
  }
  if (const auto* pc = std::get_if<PointCloud>(&s)) {
    PointCloud out{{}, pc->dim};
    for (const QVector& pt : pc->points)
      if (h.satisfied_by(pt)) out.points.push_back(pt);
    return out;
  }
  BallBox out = std::get<BallBox>(s);
  out.halfspaces.push_back(h);
  return out;
}

FeasibleSet translate_down(const FeasibleSet& s, const ZVector& t) {
  if (t.size() != ambient_dim(s)) throw DimensionMismatch("translation dimension mismatch");
  QVector tq = to_rational(t);
  if (const auto* p = std::get_if<Polytope>(&s)) {
    Polytope out = *p;
    for (LinearInequality& row : out.rows) row.rhs -= dot(row.coeffs, tq);
    return out;
  }
  if (const auto* pc = std::get_if<PointCloud>(&s)) {
    PointCloud out{{}, pc->dim};
    out.points.reserve(pc->points.size());
    for (const QVector& pt : pc->points) out.points.push_back(sub(pt, tq));
    return out;
  }
  BallBox out = std::get<BallBox>(s);
  out.center = sub(out.center, tq);
  out.lower = sub(out.lower, tq);
  out.upper = sub(out.upper, tq);
  for (LinearInequality& h : out.halfspaces) h.rhs -= dot(h.coeffs, tq);
  return out;
}

bool contains(const FeasibleSet& s, const QVector& x) {
  if (x.size() != ambient_dim(s)) throw DimensionMismatch();
  if (const auto* p = std::get_if<Polytope>(&s)) {
    for (const LinearInequality& row : p->rows)
      if (!row.satisfied_by(x)) return false;
    return true;
  }
  if (const auto* pc = std::get_if<PointCloud>(&s)) {
    for (const QVector& pt : pc->points)
      if (pt == x) return true;
    return false;
  }
  const BallBox& bb = std::get<BallBox>(s);
  Rational dist = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < bb.lower[i] || x[i] > bb.upper[i]) return false;
    Rational d = x[i] - bb.center[i];
    dist += d * d;
  }
  if (dist > bb.radius_sq) return false;
  for (const LinearInequality& h : bb.halfspaces)
    if (!h.satisfied_by(x)) return false;
  return true;
}

}  // namespace lexcut
