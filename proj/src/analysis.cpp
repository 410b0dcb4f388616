#include "lexcut/analysis.hpp"

#include <algorithm>
#include <map>

namespace lexcut {

namespace {

void merge_stats(SolveStats* stats, const OracleStats& o) {
  if (!stats) return;
  stats->oracle_calls += o.calls;
  stats->lp_solves += o.lp_solves;
  stats->kelley_cuts += o.kelley_cuts;
}

}  // namespace

std::pair<LatticeBasis, LexCut> cg_to_lexcut(const FeasibleSet& s, const CGInequality& cg,
                                             const SolveOptions& opts, SolveStats* stats) {
  if (is_zero(cg.g)) throw ZeroVector();
  auto [g_prim, factor] = gcd_normalize(cg.g);
  Rational gamma = cg.gamma / Rational(factor);

  OracleStats ostats;
  OracleResult mu_res =
      query_oracle(s, LinearQuery{to_rational(g_prim), {}, {}}, opts.oracle(), &ostats);
  merge_stats(stats, ostats);
  if (!mu_res.feasible) throw EmptyInput();
  Rational mu = mu_res.value;
  Rational rounded(rat_ceil(gamma));

  if (mu >= rounded) throw NotProper();
  if (mu < gamma)
    throw NotApplicable("g x >= gamma is not valid for S (min g x < gamma)");
  if (is_integer(mu))
    throw NotApplicable("the lex-min has integer g xbar; the first iteration emits no cut for g");

  // First iteration of the cutting-plane method with c^1 = g, run without
  // the translation (the bounds only shift the cut by an integer): since
  // gamma <= g xbar < ceil(gamma), k = 1 and the cut is g x >= ceil(g xbar).
  LatticeBasis basis = complete_basis(g_prim);
  Rational ceil_mu(rat_ceil(mu));
  if (ceil_mu != rounded) throw Error("ceil(min g x) != ceil(gamma) despite the precondition");
  LexCut cut{1, QVector{Rational(1)}, LinearInequality{to_rational(g_prim), ceil_mu}};
  return {basis, cut};
}

bool is_valid_split_cut(const FeasibleSet& s, const LinearInequality& cut,
                        const SplitDisjunction& d, const SolveOptions& opts, SolveStats* stats) {
  if (is_zero(d.pi)) throw ZeroVector();
  OracleStats ostats;
  QVector pi = to_rational(d.pi);
  FeasibleSet below = restrict_set(s, LinearInequality{negate(pi), Rational(-d.pi0)});
  FeasibleSet above = restrict_set(s, LinearInequality{pi, Rational(d.pi0 + 1)});
  bool ok = true;
  for (const FeasibleSet* side : {&below, &above}) {
    OracleResult res =
        query_oracle(*side, LinearQuery{cut.coeffs, {}, {}}, opts.oracle(), &ostats);
    if (res.feasible && res.value < cut.rhs) {
      ok = false;
      break;
    }
  }
  merge_stats(stats, ostats);
  return ok;
}

std::vector<SplitDisjunction> enumerate_splits(const FeasibleSet& s, const LinearInequality& cut,
                                               long norm_bound, const SolveOptions& opts,
                                               SolveStats* stats) {
  if (norm_bound < 1) throw IndexOutOfRange("norm bound must be >= 1");
  const size_t n = ambient_dim(s);
  std::vector<SplitDisjunction> found;
  ZVector pi(n, Int(-norm_bound));
  OracleStats ostats;

  auto lex_positive = [](const ZVector& v) {
    for (const Int& z : v) {
      if (z > 0) return true;
      if (z < 0) return false;
    }
    return false;
  };

  for (;;) {
    if (lex_positive(pi)) {
      auto [prim, g] = gcd_normalize(pi);
      if (g == 1) {
        QVector piq = to_rational(pi);
        OracleResult lo = query_oracle(s, LinearQuery{piq, {}, {}}, opts.oracle(), &ostats);
        if (!lo.feasible) throw EmptyInput();
        OracleResult hi = query_oracle(s, LinearQuery{negate(piq), {}, {}}, opts.oracle(), &ostats);
        Int p0 = rat_floor(lo.value);
        Int p0_hi = rat_ceil(-hi.value);
        for (Int p0v = p0; p0v <= p0_hi; ++p0v) {
          if (is_valid_split_cut(s, cut, SplitDisjunction{pi, p0v}, opts, stats))
            found.push_back(SplitDisjunction{pi, p0v});
        }
      }
    }
    size_t j = 0;
    while (j < n && pi[j] == norm_bound) {
      pi[j] = -norm_bound;
      ++j;
    }
    if (j == n) break;
    pi[j] += 1;
  }
  merge_stats(stats, ostats);
  return found;
}

std::vector<QVector> s_up_pointcloud(const PointCloud& s, const LatticeBasis& basis) {
  std::map<std::vector<Int>, QVector, decltype([](const ZVector& a, const ZVector& b) {
             return z_lex_less(a, b);
           })>
      ordered;
  for (const QVector& pt : s.points) {
    QVector up = round_up_lex(basis, pt);
    ordered.emplace(to_integer(basis.products(up)), up);
  }
  std::vector<QVector> out;
  out.reserve(ordered.size());
  for (auto& [key, pt] : ordered) out.push_back(pt);
  return out;
}

std::vector<ZVector> v_set(const LatticeBasis& basis, const std::vector<QVector>& s_up) {
  const size_t n = basis.dim();
  std::vector<ZVector> all;
  for (const QVector& xbar : s_up) {
    ZVector p = to_integer(basis.products(xbar));
    all.push_back(p);
    for (size_t k = 1; k < n; ++k) {
      ZVector alpha(n, Int(0));
      for (size_t i = 0; i + 1 < k; ++i) alpha[i] = p[i];
      alpha[k - 1] = p[k - 1] + 1;
      all.push_back(std::move(alpha));
    }
  }
  std::sort(all.begin(), all.end(), z_lex_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

SolveOutcome brute_force_integer_opt(const FeasibleSet& s, const ZVector& c,
                                     const std::optional<LatticeBasis>& tie_basis,
                                     long cell_cap) {
  const size_t n = ambient_dim(s);
  if (c.size() != n) throw DimensionMismatch();
  if (is_zero(c)) throw ZeroObjective();
  LatticeBasis basis = tie_basis ? *tie_basis : complete_basis(gcd_normalize(c).first);

  SolveOutcome out;
  out.algorithm = "brute_force";
  out.objective = c;

  // Integer bounding box per coordinate.
  ZVector lo(n), hi(n);
  if (const auto* pc = std::get_if<PointCloud>(&s)) {
    if (pc->points.empty()) return out;
    for (size_t i = 0; i < n; ++i) {
      Rational mn = pc->points[0][i], mx = mn;
      for (const QVector& pt : pc->points) {
        mn = std::min(mn, pt[i]);
        mx = std::max(mx, pt[i]);
      }
      lo[i] = rat_ceil(mn);
      hi[i] = rat_floor(mx);
    }
  } else if (const auto* bb = std::get_if<BallBox>(&s)) {
    for (size_t i = 0; i < n; ++i) {
      lo[i] = rat_ceil(bb->lower[i]);
      hi[i] = rat_floor(bb->upper[i]);
    }
  } else {
    const auto& poly = std::get<Polytope>(s);
    QVector obj(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
      obj[i] = 1;
      LpResult mn = solve_lp(obj, poly.rows);
      obj[i] = -1;
      LpResult mx = solve_lp(obj, poly.rows);
      obj[i] = 0;
      if (mn.status == LpStatus::Infeasible) return out;
      if (mn.status == LpStatus::Unbounded || mx.status == LpStatus::Unbounded)
        throw UnboundedQuery("polytope is unbounded");
      lo[i] = rat_ceil(mn.value);
      hi[i] = rat_floor(-mx.value);
    }
  }

  Int cells = 1;
  for (size_t i = 0; i < n; ++i) {
    if (hi[i] < lo[i]) return out;
    cells *= hi[i] - lo[i] + 1;
    if (cells > cell_cap) throw BoxTooLarge();
  }

  ZVector x = lo;
  bool have_best = false;
  QVector best;
  Rational best_val;
  for (;;) {
    QVector xq = to_rational(x);
    if (contains(s, xq)) {
      Rational val = dot(c, xq);
      if (!have_best || val < best_val ||
          (val == best_val && lex_less(basis, xq, best))) {
        have_best = true;
        best = xq;
        best_val = val;
      }
    }
    size_t j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    x[j] += 1;
  }

  if (have_best) {
    out.feasible = true;
    out.point = best;
    out.value = best_val;
  }
  return out;
}

}  // namespace lexcut
