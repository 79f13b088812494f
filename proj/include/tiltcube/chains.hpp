#pragma once

// Random orderings of [n] and the nested chain families whose pairwise
// differences realize a fixed ratio, plus Monte-Carlo estimates of chain
// membership probabilities and family hit counts.

#include <cstdint>
#include <vector>

#include "tiltcube/core.hpp"

namespace tiltcube {

// A permutation of 1..n. Chain builders split it into a prefix block
// (a_1, a_2, ...) and a suffix block (b_1, b_2, ...) sized by the family in
// use. The recorded seed makes every downstream sample reproducible.
struct Ordering {
  std::vector<int> perm;
  std::uint64_t seed = 0;
};

/// Uniform permutation from a seeded mt19937_64 (rejection-sampled
/// Fisher-Yates, so output is identical across platforms).
Ordering random_ordering(int n, std::uint64_t seed);

/// Deterministic per-trial seed derived from (master seed, trial index);
/// trials can run in any order or in parallel with identical results.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index);

enum class ChainKind { half_double, ratio_pq };

struct ChainFamily {
  ChainKind kind;
  std::vector<SubsetWord> chains;  // C_0, C_1, ... with strictly increasing sizes
  Ordering ordering;
  // half_double parameters
  int l = -1;
  // ratio_pq parameters
  int p = 0, q = 0, k = -1, k_prime = -1, m = 0;
};

/// Chains C_i = {a_j : j in [2i]} + {b_t : t in [i+1, l]} for i in [0, l],
/// over the split prefix ceil(2n/3) / suffix floor(n/3). |C_i| = l + i, and
/// for i < j the pair satisfies |C_j \ C_i| = 2 |C_i \ C_j|.
ChainFamily chain_family_12(const Ordering& ordering, int l);

/// Chains C_i = {a_j : j in [qi + k']} + {b_j : j in [pi+1, pm]} for
/// i in [0, m-1], plus C_m when k' = 0; requires (p+q) | n, m = n/(p+q),
/// and k' = (k - p*m) mod (q-p). Sizes are (q-p)i + k' + pm, all lying in
/// the window class J_k, and for i < j: q |C_i \ C_j| = p |C_j \ C_i|.
ChainFamily chain_family_pq(const Ordering& ordering, int p, int q, int k);

struct MembershipEstimate {
  double probability = 0;
  double std_error = 0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Fraction of seeded trials in which B appears in chain_family_12. Requires
/// l <= |B| <= 2l (outside that range the probability is identically zero,
/// so sampling would only mask a caller bug).
MembershipEstimate estimate_membership(int n, int l, SubsetWord b, std::uint64_t trials,
                                       std::uint64_t seed);

struct HitsEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Empirical mean of X = |F intersect C| over seeded chain families.
HitsEstimate expected_hits(const SetFamily& family, int l, std::uint64_t trials,
                           std::uint64_t seed);

}  // namespace tiltcube
