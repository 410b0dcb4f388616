#pragma once

#include <optional>
#include <string>

#include "lexcut/oracle.hpp"

namespace lexcut {

struct SolveOptions {
  Rational eps = Rational(1, 1000000000);     // ball oracle tolerance
  Rational delta_int = Rational(1, 1000000);  // integrality snapping for numeric oracles
  bool refresh_bounds = false;                // re-derive the lower bounds every iteration
  bool strengthen_alpha = false;              // alpha_n := c^n xup + 1 in the enumeration
  bool record_trace = true;
  long iter_limit = 1000000;
  long kelley_cap = 10000;

  OracleOptions oracle() const { return OracleOptions{eps, kelley_cap}; }
};

/// Output of Algorithm 1 preprocessing: basis, bounds, translation, and the
/// translated set intersected with the cone K.
struct Preprocessed {
  LatticeBasis basis;
  QVector ell_star;     // min c^i x over the original set
  QVector u_star;       // max c^i x (certifies compactness)
  ZVector ell;          // ceil(ell_star)
  ZVector translation;  // integer t with C t = ell
  FeasibleSet set;      // translated, intersected with K
  bool numeric = false;
};

enum class IterStatus { Cut, Optimal, Infeasible };

/// One Algorithm 1 iteration. Points and the cut are reported in original
/// coordinates.
struct CutIteration {
  IterStatus status = IterStatus::Cut;
  QVector xbar;
  QVector xbar_up;
  std::optional<size_t> k;
  std::optional<LexCut> cut;
};

/// One Algorithm 2 iteration (one execution of the S* line).
struct EnumIteration {
  ZVector alpha;
  size_t i_star = 1;
  bool sstar_empty = false;
  std::optional<QVector> xbar;     // original coordinates
  std::optional<QVector> xbar_up;  // original coordinates
};

struct SolveStats {
  long oracle_calls = 0;
  long lp_solves = 0;
  long kelley_cuts = 0;
  long cuts = 0;         // Algorithm 1 cutting planes
  long line2_execs = 0;  // Algorithm 2 S* constructions
};

struct SolveOutcome {
  bool feasible = false;
  QVector point;   // original coordinates
  Rational value;  // objective value at point
  std::string algorithm;
  ZVector objective;
  std::optional<LatticeBasis> basis;
  ZVector translation;
  ZVector ell;
  QVector ell_star;
  Rational eps;
  Rational delta_int;
  std::vector<CutIteration> cut_trace;
  std::vector<EnumIteration> enum_trace;
  SolveStats stats;
};

Preprocessed preprocess(const FeasibleSet& s, const ZVector& c,
                        const std::optional<LatticeBasis>& basis, const SolveOptions& opts,
                        SolveStats* stats = nullptr);

struct LexMinResult {
  bool feasible = false;
  QVector point;
  QVector products;  // stage values (c^1 x, ..., c^n x)
};

/// Lex-min of P.set intersected with the extra constraints: n nested
/// minimizations. Stages below first_stage are taken from fixed_prefix
/// (their values are pinned by extra_eqs).
LexMinResult lex_min(const Preprocessed& p, const std::vector<LinearInequality>& extra_ineqs = {},
                     const std::vector<std::pair<QVector, Rational>>& extra_eqs = {},
                     size_t first_stage = 1, const QVector& fixed_prefix = {},
                     const SolveOptions& opts = {}, SolveStats* stats = nullptr);

/// Membership of the integer point xup in P.set intersected with the given
/// constraints; one oracle call with all n products pinned.
bool membership_x_up(const Preprocessed& p, const ZVector& xup,
                     const std::vector<LinearInequality>& extra_ineqs = {},
                     const std::vector<std::pair<QVector, Rational>>& extra_eqs = {},
                     const SolveOptions& opts = {}, SolveStats* stats = nullptr);

/// Algorithm 1: lex cutting-plane method.
SolveOutcome algorithm1_solve(const FeasibleSet& s, const ZVector& c,
                              const std::optional<LatticeBasis>& basis = {},
                              const SolveOptions& opts = {});

/// Algorithm 2: lex-enumeration.
SolveOutcome algorithm2_solve(const FeasibleSet& s, const ZVector& c,
                              const std::optional<LatticeBasis>& basis = {},
                              const SolveOptions& opts = {});

}  // namespace lexcut
