#pragma once

// Forbidden pair configurations: definition, single-pair tests, whole-family
// verification, level-compatibility arithmetic and conflict graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiltcube/core.hpp"

namespace tiltcube {

enum class PredicateKind { ratio, exact_distance, at_most_distance, comparability };

// A forbidden configuration over ordered distinct pairs (A, B).
class ConflictPredicate {
 public:
  /// p|A\B| = q|B\A| is forbidden; requires coprime p < q.
  static ConflictPredicate ratio(int p, int q);
  /// |A\B| = k is forbidden.
  static ConflictPredicate exact_distance(int k);
  /// |A\B| <= k is forbidden.
  static ConflictPredicate at_most_distance(int k);
  /// A strictly contained in B is forbidden (antichain condition).
  static ConflictPredicate comparability();

  PredicateKind kind() const { return kind_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int k() const { return k_; }

  std::string to_string() const;
  /// Accepts `ratio:P:Q`, `dist:K`, `distle:K`, `antichain`.
  static ConflictPredicate parse(std::string_view text);

 private:
  ConflictPredicate(PredicateKind kind, int p, int q, int k) : kind_(kind), p_(p), q_(q), k_(k) {}
  PredicateKind kind_;
  int p_ = 0, q_ = 0, k_ = 0;
};

/// True iff the ordered pair (A, B) realizes the forbidden configuration.
/// Throws std::invalid_argument when A == B; every condition quantifies over
/// distinct sets, so equal arguments are a caller bug.
bool pair_conflicts(SubsetWord a, SubsetWord b, const ConflictPredicate& predicate);

enum class VerifyStrategy { pairwise, level_shortcut };

struct VerificationReport {
  bool valid = true;
  std::vector<std::pair<SubsetWord, SubsetWord>> violations;  // ordered (A, B), scan order
  VerifyStrategy strategy = VerifyStrategy::pairwise;
};

/// Checks every ordered distinct pair (pairwise), or level pairs only
/// (level_shortcut; requires a ratio predicate and a family that is an exact
/// union of full levels). Violation reporting is deterministic in the
/// normalized member order and truncated at max_violations.
/// Pairwise scans may run on several threads (TILTCUBE_THREADS overrides the
/// count); reports are identical regardless.
VerificationReport verify_family(const SetFamily& family, const ConflictPredicate& predicate,
                                 VerifyStrategy strategy = VerifyStrategy::pairwise,
                                 std::size_t max_violations = 16);

/// Whether levels u and v of [n] can host a pair A, B with p|A\B| = q|B\A|,
/// A != B. With w = |v - u| and the larger level carrying A: a pair exists
/// iff (q-p) | w, t := p*w/(q-p) <= min(u,v), and max(u,v) + t <= n.
bool level_conflict_ratio(int u, int v, int n, int p, int q);

struct LevelRange {
  int lo = 0;
  int hi = 0;
};

// Undirected, loop-free graph over a subset universe; edge {A,B} iff the
// ordered conflict holds in either direction. Vertices in normalized order.
struct ConflictGraph {
  int n = 0;
  std::vector<SubsetWord> vertices;
  std::vector<std::vector<std::uint32_t>> adjacency;  // sorted neighbor lists
  std::size_t edge_count = 0;
};

ConflictGraph conflict_graph(int n, const ConflictPredicate& predicate,
                             std::optional<LevelRange> universe = std::nullopt,
                             std::size_t max_vertices = std::size_t{1} << 20);

}  // namespace tiltcube
