#pragma once

// Exact maximum valid families via branch-and-bound maximum independent set
// on the symmetrized conflict graph, and seeded greedy maximal families.

#include <cstdint>

#include "tiltcube/core.hpp"
#include "tiltcube/predicates.hpp"

namespace tiltcube {

struct SearchBudget {
  std::size_t max_universe = std::size_t{1} << 14;
  double time_limit_seconds = 60.0;
  bool deterministic = true;  // lex-smallest optimal witness; heuristic branching otherwise
};

enum class SearchStatus { proved_optimal, lower_bound_only };

struct SearchResult {
  std::size_t size = 0;
  SetFamily witness;
  SearchStatus status = SearchStatus::lower_bound_only;
  std::uint64_t nodes_expanded = 0;
};

/// Largest family of subsets of [n] with no conflicting pair. Upper bounds
/// per subproblem come from a greedy clique cover and, for ratio predicates,
/// the window LP restricted to the candidate level counts. On budget
/// exhaustion the best family found so far is returned with
/// lower_bound_only status. The witness is re-verified before returning.
SearchResult max_family(int n, const ConflictPredicate& predicate,
                        const SearchBudget& budget = {});

/// Maximal valid family grown along a seeded random scan of the universe.
SetFamily greedy_family(int n, const ConflictPredicate& predicate, std::uint64_t seed,
                        std::size_t max_universe = std::size_t{1} << 20);

}  // namespace tiltcube
