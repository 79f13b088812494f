#pragma once

// Test-only brute-force oracles. Everything here recomputes expected values
// from first principles (exhaustive enumeration, additive tables, direct
// definitions) independently of the library code paths under test.

#include <bit>
#include <cstdint>
#include <vector>

#include "tiltcube/core.hpp"
#include "tiltcube/predicates.hpp"

namespace oracle {

// Additive Pascal table in plain uint64 (safe through n = 64).
inline std::uint64_t pascal_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// All subsets of [n] of cardinality k, by scanning every bitmask.
inline std::vector<std::uint64_t> level_masks(int n, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
    if (std::popcount(b) == k) out.push_back(b);
  return out;
}

// Does any ordered pair across the two levels violate p|A\B| = q|B\A|?
inline bool level_pair_conflict_exhaustive(int u, int v, int n, int p, int q) {
  auto us = level_masks(n, u), vs = level_masks(n, v);
  for (std::uint64_t a : us) {
    for (std::uint64_t b : vs) {
      if (a == b) continue;
      int ab = std::popcount(a & ~b), ba = std::popcount(b & ~a);
      if (p * ab == q * ba || p * ba == q * ab) return true;
    }
  }
  return false;
}

// Largest valid subfamily of P[n] by exhaustive subset enumeration. Only
// usable for n <= 4 (2^(2^n) candidates).
inline std::size_t max_family_exhaustive(int n, const tiltcube::ConflictPredicate& predicate) {
  const std::uint64_t universe = std::uint64_t{1} << n;
  std::size_t best = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << universe); ++pick) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t v = 0; v < universe; ++v)
      if ((pick >> v) & 1) members.push_back(v);
    if (members.size() <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (std::size_t j = 0; j < members.size() && ok; ++j) {
        if (i == j) continue;
        if (tiltcube::pair_conflicts(tiltcube::SubsetWord{members[i]},
                                     tiltcube::SubsetWord{members[j]}, predicate))
          ok = false;
      }
    if (ok) best = members.size();
  }
  return best;
}

}  // namespace oracle
