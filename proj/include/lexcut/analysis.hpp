#pragma once

#include "lexcut/solver.hpp"

namespace lexcut {

struct SplitDisjunction {
  ZVector pi;
  Int pi0;
};

/// g x >= gamma valid for S; the rounded form is g x >= ceil(gamma).
struct CGInequality {
  ZVector g;
  Rational gamma;
};

/// Realizes a proper Chvatal-Gomory inequality as the first cut of the
/// cutting-plane method run with a basis whose first row is g: returns that
/// basis and the cut, whose halfspace equals {g x >= ceil(gamma)}.
/// Preconditions checked against the oracle minimum mu = min g x:
/// NotProper when ceil(gamma) <= mu, NotApplicable unless gamma <= mu < ceil(gamma).
std::pair<LatticeBasis, LexCut> cg_to_lexcut(const FeasibleSet& s, const CGInequality& cg,
                                             const SolveOptions& opts = {},
                                             SolveStats* stats = nullptr);

/// Two oracle calls: the cut must hold at the minimum over each side of the
/// disjunction pi x <= pi0  |  pi x >= pi0 + 1 (vacuously on empty sides).
bool is_valid_split_cut(const FeasibleSet& s, const LinearInequality& cut,
                        const SplitDisjunction& d, const SolveOptions& opts = {},
                        SolveStats* stats = nullptr);

/// All disjunctions with |pi|_inf <= norm_bound (pi primitive,
/// lexicographically positive) that validate the cut.
std::vector<SplitDisjunction> enumerate_splits(const FeasibleSet& s, const LinearInequality& cut,
                                               long norm_bound, const SolveOptions& opts = {},
                                               SolveStats* stats = nullptr);

/// {x-up : x in S} for a point cloud inside K, deduplicated and lex-sorted.
std::vector<QVector> s_up_pointcloud(const PointCloud& s, const LatticeBasis& basis);

/// Union over s_up of the n alpha-vectors of each point (the C-coordinates
/// of the Q-vertices), deduplicated and sorted in the standard lex order.
std::vector<ZVector> v_set(const LatticeBasis& basis, const std::vector<QVector>& s_up);

/// Independent test oracle: enumerates the integer points of a bounding box
/// and filters by exact membership. Ties on the objective break by the lex
/// order of tie_basis (default: the completed basis of the objective).
SolveOutcome brute_force_integer_opt(const FeasibleSet& s, const ZVector& c,
                                     const std::optional<LatticeBasis>& tie_basis = {},
                                     long cell_cap = 10000000);

}  // namespace lexcut
