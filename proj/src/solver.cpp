#include "lexcut/solver.hpp"

namespace lexcut {

namespace {

QVector shift_point(const QVector& x, const ZVector& t) { return add(x, to_rational(t)); }

LinearInequality shift_inequality(const LinearInequality& h, const ZVector& t) {
  return {h.coeffs, h.rhs + dot(h.coeffs, to_rational(t))};
}

struct BoundsResult {
  QVector ell_star;
  QVector u_star;
  ZVector ell;
};

BoundsResult compute_bounds(const FeasibleSet& s, const LatticeBasis& basis, const Rational& snap,
                            const SolveOptions& opts, SolveStats* stats) {
  const size_t n = basis.dim();
  OracleStats ostats;
  BoundsResult out;
  out.ell_star.resize(n);
  out.u_star.resize(n);
  out.ell.resize(n);
  for (size_t i = 1; i <= n; ++i) {
    QVector row = to_rational(basis.row(i - 1));
    OracleResult lo = query_oracle(s, LinearQuery{row, {}, {}}, opts.oracle(), &ostats);
    if (!lo.feasible) throw EmptyInput();
    OracleResult hi = query_oracle(s, LinearQuery{negate(row), {}, {}}, opts.oracle(), &ostats);
    if (!hi.feasible) throw EmptyInput();
    out.ell_star[i - 1] = lo.value;
    out.u_star[i - 1] = -hi.value;
    Rational v = lo.value;
    if (snap > 0 && int_distance(v) <= snap) v = Rational(nearest_int(v));
    out.ell[i - 1] = rat_ceil(v);
  }
  if (stats) {
    stats->oracle_calls += ostats.calls;
    stats->lp_solves += ostats.lp_solves;
    stats->kelley_cuts += ostats.kelley_cuts;
  }
  return out;
}

FeasibleSet intersect_with_cone(FeasibleSet s, const LatticeBasis& basis) {
  for (size_t i = 1; i <= basis.dim(); ++i)
    s = restrict_set(s, LinearInequality{to_rational(basis.row(i - 1)), Rational(0)});
  return s;
}

void merge_stats(SolveStats* stats, const OracleStats& o) {
  if (!stats) return;
  stats->oracle_calls += o.calls;
  stats->lp_solves += o.lp_solves;
  stats->kelley_cuts += o.kelley_cuts;
}

}  // namespace

Preprocessed preprocess(const FeasibleSet& s, const ZVector& c,
                        const std::optional<LatticeBasis>& basis_opt, const SolveOptions& opts,
                        SolveStats* stats) {
  const size_t n = ambient_dim(s);
  if (c.size() != n) throw DimensionMismatch("objective dimension mismatch");
  if (is_zero(c)) throw ZeroObjective();
  auto [c_prim, g] = gcd_normalize(c);
  LatticeBasis basis = basis_opt ? *basis_opt : complete_basis(c_prim);
  if (basis.dim() != n) throw DimensionMismatch("basis dimension mismatch");
  if (basis.row(0) != c_prim)
    throw NotPrimitive("basis first row must equal the normalized objective");

  bool numeric = !set_is_exact(s);
  Rational snap = numeric ? opts.delta_int : Rational(0);
  BoundsResult b = compute_bounds(s, basis, snap, opts, stats);
  ZVector t = solve_unimodular(basis, b.ell);
  FeasibleSet translated = intersect_with_cone(translate_down(s, t), basis);
  return Preprocessed{basis, b.ell_star, b.u_star, b.ell, t, std::move(translated), numeric};
}

LexMinResult lex_min(const Preprocessed& p, const std::vector<LinearInequality>& extra_ineqs,
                     const std::vector<std::pair<QVector, Rational>>& extra_eqs,
                     size_t first_stage, const QVector& fixed_prefix, const SolveOptions& opts,
                     SolveStats* stats) {
  const size_t n = p.basis.dim();
  if (first_stage < 1 || first_stage > n) throw IndexOutOfRange("first_stage must lie in 1..n");
  OracleStats ostats;
  LexMinResult out;
  out.products.resize(n);
  std::vector<std::pair<QVector, Rational>> eqs = extra_eqs;
  for (size_t i = 1; i < first_stage; ++i) out.products[i - 1] = fixed_prefix[i - 1];
  for (size_t i = first_stage; i <= n; ++i) {
    QVector row = to_rational(p.basis.row(i - 1));
    OracleResult res = query_oracle(p.set, LinearQuery{row, eqs, extra_ineqs}, opts.oracle(), &ostats);
    if (!res.feasible) {
      if (i != first_stage)
        throw Error("lex-min stage " + std::to_string(i) +
                    " lost feasibility; the oracle tolerance is too coarse for this instance");
      merge_stats(stats, ostats);
      return out;
    }
    out.products[i - 1] = res.value;
    out.point = res.point;
    eqs.emplace_back(row, res.value);
  }
  out.feasible = true;
  merge_stats(stats, ostats);
  return out;
}

bool membership_x_up(const Preprocessed& p, const ZVector& xup,
                     const std::vector<LinearInequality>& extra_ineqs,
                     const std::vector<std::pair<QVector, Rational>>& extra_eqs,
                     const SolveOptions& opts, SolveStats* stats) {
  const size_t n = p.basis.dim();
  OracleStats ostats;
  std::vector<std::pair<QVector, Rational>> eqs = extra_eqs;
  QVector xq = to_rational(xup);
  for (size_t i = 1; i <= n; ++i)
    eqs.emplace_back(to_rational(p.basis.row(i - 1)), p.basis.product(i, xq));
  QVector zero(n, Rational(0));
  OracleResult res = query_oracle(p.set, LinearQuery{zero, eqs, extra_ineqs}, opts.oracle(), &ostats);
  merge_stats(stats, ostats);
  return res.feasible;
}

SolveOutcome algorithm1_solve(const FeasibleSet& s, const ZVector& c,
                              const std::optional<LatticeBasis>& basis_opt,
                              const SolveOptions& opts) {
  SolveOutcome out;
  out.algorithm = "cut";
  out.objective = c;
  out.eps = opts.eps;
  out.delta_int = opts.delta_int;

  Preprocessed pre = preprocess(s, c, basis_opt, opts, &out.stats);
  out.basis = pre.basis;
  out.translation = pre.translation;
  out.ell = pre.ell;
  out.ell_star = pre.ell_star;
  const LatticeBasis& basis = pre.basis;
  const size_t n = basis.dim();
  const Rational snap = pre.numeric ? opts.delta_int : Rational(0);

  Preprocessed work = pre;
  ZVector t_total = pre.translation;

  for (long iter = 0; iter < opts.iter_limit; ++iter) {
    if (opts.refresh_bounds && iter > 0) {
      // Concluding-remarks variant: re-derive the lower bounds for the
      // current set and re-translate when they moved.
      try {
        BoundsResult b = compute_bounds(work.set, basis, snap, opts, &out.stats);
        if (!is_zero(b.ell)) {
          ZVector shift = solve_unimodular(basis, b.ell);
          work.set = intersect_with_cone(translate_down(work.set, shift), basis);
          for (size_t i = 0; i < n; ++i) t_total[i] += shift[i];
        }
      } catch (const EmptyInput&) {
        if (opts.record_trace)
          out.cut_trace.push_back(CutIteration{IterStatus::Infeasible, {}, {}, {}, {}});
        out.feasible = false;
        return out;
      }
    }

    LexMinResult lm = lex_min(work, {}, {}, 1, {}, opts, &out.stats);
    if (!lm.feasible) {
      if (opts.record_trace) out.cut_trace.push_back(CutIteration{IterStatus::Infeasible, {}, {}, {}, {}});
      out.feasible = false;
      return out;
    }

    QVector products = snap_products(lm.products, snap);
    size_t k = 0;
    for (size_t i = 1; i <= n; ++i) {
      if (!is_integer(products[i - 1])) {
        k = i;
        break;
      }
    }

    if (k == 0) {
      ZVector xint = solve_unimodular(basis, to_integer(products));
      QVector xint_q = to_rational(xint);
      if (pre.numeric && !contains(work.set, xint_q))
        throw Error("snapped integer optimum failed the exact membership check; "
                    "decrease eps or delta_int");
      QVector point = shift_point(xint_q, t_total);
      if (opts.record_trace)
        out.cut_trace.push_back(
            CutIteration{IterStatus::Optimal, shift_point(lm.point, t_total), point, {}, {}});
      out.feasible = true;
      out.point = point;
      out.value = dot(c, point);
      return out;
    }

    LexCut cut = lexcut_frac_from_products(basis, products, k);
    ZVector up = round_up_products(products);
    QVector xup = to_rational(solve_unimodular(basis, up));
    if (opts.record_trace) {
      LexCut reported = cut;
      reported.ineq = shift_inequality(cut.ineq, t_total);
      out.cut_trace.push_back(CutIteration{IterStatus::Cut, shift_point(lm.point, t_total),
                                           shift_point(xup, t_total), k, reported});
    }
    work.set = restrict_set(work.set, cut.ineq);
    ++out.stats.cuts;
  }
  throw IterationLimit("Algorithm 1 exceeded the iteration limit");
}

SolveOutcome algorithm2_solve(const FeasibleSet& s, const ZVector& c,
                              const std::optional<LatticeBasis>& basis_opt,
                              const SolveOptions& opts) {
  SolveOutcome out;
  out.algorithm = "enum";
  out.objective = c;
  out.eps = opts.eps;
  out.delta_int = opts.delta_int;

  Preprocessed pre = preprocess(s, c, basis_opt, opts, &out.stats);
  out.basis = pre.basis;
  out.translation = pre.translation;
  out.ell = pre.ell;
  out.ell_star = pre.ell_star;
  const LatticeBasis& basis = pre.basis;
  const size_t n = basis.dim();
  const Rational snap = pre.numeric ? opts.delta_int : Rational(0);

  ZVector alpha(n, Int(0));
  size_t i_star = 1;

  for (long iter = 0; iter < opts.iter_limit; ++iter) {
    ++out.stats.line2_execs;
    std::vector<std::pair<QVector, Rational>> eqs;
    std::vector<LinearInequality> ineqs;
    QVector prefix(n);
    for (size_t i = 1; i <= n; ++i) {
      QVector row = to_rational(basis.row(i - 1));
      if (i < i_star) {
        eqs.emplace_back(row, Rational(alpha[i - 1]));
        prefix[i - 1] = Rational(alpha[i - 1]);
      } else {
        ineqs.push_back(LinearInequality{row, Rational(alpha[i - 1])});
      }
    }

    LexMinResult lm = lex_min(pre, ineqs, eqs, i_star, prefix, opts, &out.stats);
    if (!lm.feasible) {
      if (opts.record_trace)
        out.enum_trace.push_back(EnumIteration{alpha, i_star, true, {}, {}});
      if (i_star == 1) {
        out.feasible = false;
        return out;
      }
      --i_star;
      alpha[i_star - 1] += 1;
      for (size_t i = i_star; i < n; ++i) alpha[i] = 0;
      continue;
    }

    QVector products = snap_products(lm.products, snap);
    ZVector up = round_up_products(products);
    ZVector xup = solve_unimodular(basis, up);
    bool member = membership_x_up(pre, xup, ineqs, eqs, opts, &out.stats);
    if (opts.record_trace)
      out.enum_trace.push_back(EnumIteration{alpha, i_star, false,
                                             shift_point(lm.point, pre.translation),
                                             shift_point(to_rational(xup), pre.translation)});
    if (member) {
      out.feasible = true;
      out.point = shift_point(to_rational(xup), pre.translation);
      out.value = dot(c, out.point);
      return out;
    }
    i_star = n;
    alpha = up;
    if (opts.strengthen_alpha) alpha[n - 1] += 1;
  }
  throw IterationLimit("Algorithm 2 exceeded the iteration limit");
}

}  // namespace lexcut
