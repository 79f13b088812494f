#pragma once

// Window inequalities on level profiles, the exact-rational linear programs
// they induce, and the finite-n counting bounds for the distance predicates.
// No floating point anywhere in this module: optimality and extremal
// comparisons are equality checks on rationals.

#include <utility>
#include <vector>

#include "tiltcube/core.hpp"
#include "tiltcube/predicates.hpp"

namespace tiltcube {

using Window = std::vector<int>;  // explicit set of level indices

/// Windows [l, 2l] for l in [0, floor(n/3)] and [2k-n, k] for
/// k in [ceil(2n/3), n]. Overlapping instantiations are kept as-is.
std::vector<Window> window_sets_12(int n);

/// The q-p residue classes J_k of [ceil(pn/(p+q)), floor(qn/(p+q))]
/// modulo q-p, for k = 0 .. q-p-1 (a class may be empty).
std::vector<Window> window_sets_pq(int n, int p, int q);

struct WindowCheck {
  std::vector<Rational> sums;  // one per window, same order
  bool pass = false;           // all sums <= 1
};

/// Exact per-window sums of counts[j] / binom(n, j).
WindowCheck check_windows(const LevelProfile& profile, const std::vector<Window>& windows);

enum class LpVariant { full, jk_only };

// max sum x_j subject to: sum_{j in W} x_j / binom(n,j) <= 1 per window,
// 0 <= x_j <= box[j].
struct LinearProgram {
  int n = 0;
  std::vector<Window> windows;
  std::vector<BigInt> box;  // length n+1
};

/// full: all half/double windows (only defined for ratio 1:2).
/// jk_only: the q-p residue-class windows. Boxes are binom(n, j).
LinearProgram build_lp(int n, int p, int q, LpVariant variant);

enum class Uniqueness { unique, multiple, unknown };

struct LPSolution {
  Rational optimum;
  LevelProfile profile;          // a maximizer
  Uniqueness uniqueness = Uniqueness::unknown;
  std::vector<Rational> dual;    // per constraint row (windows then boxes)
  LevelProfile alt_profile;      // second distinct maximizer when multiple
};

/// Exact primal simplex with Bland's rule. The returned dual is feasible and
/// satisfies dual objective == primal optimum (verified internally). The
/// uniqueness flag is decided, not guessed: every variable is pushed to its
/// extremes over the optimal face.
LPSolution solve_lp_exact(const LinearProgram& lp);

/// Independent cross-check: enumerate all basis subsets of the constraint
/// rows, keep feasible vertices, return the best objective. Guarded at
/// n + 1 <= 12 variables.
Rational solve_lp_vertex_enum(const LinearProgram& lp);

/// Closed-form optimum of the jk_only LP: levels outside the classes take
/// their full binomial, each class contributes its largest binomial.
Rational lp_closed_form_jk(int n, int p, int q);

struct LevelBoundRow {
  int level = 0;
  BigInt members;
  BigInt lhs;    // (n - level) * members
  BigInt rhs;    // binom(n, level + 1)
  bool pass = false;
};

struct Distance1Report {
  bool family_valid = false;
  std::vector<std::pair<SubsetWord, SubsetWord>> violations;  // when invalid
  std::vector<LevelBoundRow> rows;                            // levels 0..n-1
  bool pass = false;
};

/// For a family with no pair at exact distance 1, each (i+1)-set contains at
/// most one member of level i, so (n-i)|F_i| <= binom(n, i+1). Verifies the
/// family first and reports violations instead when it fails.
Distance1Report distance1_level_bound(const SetFamily& family);

struct AtMostKReport {
  bool family_valid = false;
  std::vector<std::pair<SubsetWord, SubsetWord>> violations;
  BigInt weight;  // sum over members of binom(|A|, k)
  BigInt bound;   // binom(n, floor(n/2))
  bool pass = false;
};

/// Shadow-count weight bound for families with all pair distances > k.
AtMostKReport atmostk_weight_bound(const SetFamily& family, int k);

}  // namespace tiltcube
