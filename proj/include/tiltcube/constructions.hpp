#pragma once

// The explicit families: the level-union family B0 driven by the halving
// index recursion, interval-of-levels families for a general ratio, the
// modular middle-layer family and its power-sum refinement.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltcube/core.hpp"

namespace tiltcube {

// Levels produced by a_0 = b_0 = n/2, a_i = ceil(a_{i-1}/2) - 1 while >= 0,
// b_i = floor((b_{i-1}+n)/2) + 1 while <= n.
struct LevelIndexSet {
  int n = 0;
  std::vector<int> levels;   // sorted union of both chains
  std::vector<int> a_chain;  // descending half-chain
  std::vector<int> b_chain;  // ascending half-chain
};

/// Runs the halving recursion for even n (2 <= n <= 256).
LevelIndexSet index_set(int n);

/// Union of the named full levels of [n], normalized order.
SetFamily build_level_union(int n, const std::vector<int>& levels);

/// The level union over index_set(n).
SetFamily build_b0(int n);

/// |build_b0(n)| by binomial sums, without enumerating the family.
BigInt b0_size(int n);

/// Union of q-p consecutive levels. With no anchor the interval is placed to
/// contain floor(n/2), clipped to fit [0,n]; an explicit anchor fixes the
/// lowest level.
SetFamily build_interval_family(int n, int p, int q, std::optional<int> anchor = std::nullopt);

struct ModularFamilyResult {
  SetFamily family;
  int residue;
};

/// All floor(n/2)-sets with element sum congruent to r mod n. When r is
/// omitted, the smallest residue maximizing the family size is chosen.
ModularFamilyResult build_modular_family(int n, std::optional<int> r = std::nullopt);

/// All floor(n/2)-sets A of a prime n with sum of i^d over i in A congruent
/// to 0 mod n for every 1 <= d <= k.
SetFamily build_power_sum_family(int n, int k);

// Parsed construction request: `b0`, `levels:0,2,4`, `interval:p:q[:anchor]`,
// `modular[:r]`, `powersum:k`.
struct ConstructionRequest {
  enum class Kind { b0, level_union, interval, modular, power_sum } kind;
  std::vector<int> levels;
  int p = 0, q = 0, k = 0;
  std::optional<int> anchor;
  std::optional<int> residue;
};

ConstructionRequest parse_construction(std::string_view text);

struct BuiltConstruction {
  SetFamily family;
  std::string kind;
  std::optional<int> residue;  // set for modular builds
};

BuiltConstruction build_construction(const ConstructionRequest& request, int n);

}  // namespace tiltcube
