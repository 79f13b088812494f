#pragma once

// Ground sets, bitmask subsets, families, level profiles and exact
// arithmetic. Everything here is immutable after construction and safe to
// share across threads.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tiltcube {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Serializes a rational as "num/den" (always with the slash, e.g. "10/1").
std::string format_rational(const Rational& r);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders an exact rational as a decimal string with the given number of
/// fraction digits (round half away from zero). Display helper only.
std::string format_decimal(const Rational& r, int digits);

// The ambient set {1,...,n}, n <= 64 so a subset fits one machine word.
class GroundSet {
 public:
  explicit GroundSet(int n) : n_(n) {
    if (n < 1 || n > 64) throw std::invalid_argument("ground set size must be in [1,64]");
  }
  int n() const { return n_; }
  std::uint64_t mask() const { return n_ == 64 ? ~0ULL : (1ULL << n_) - 1; }
  friend bool operator==(GroundSet a, GroundSet b) { return a.n_ == b.n_; }

 private:
  int n_;
};

// One subset of [n]; bit i-1 set <=> element i present.
struct SubsetWord {
  std::uint64_t bits = 0;
  friend bool operator==(SubsetWord a, SubsetWord b) { return a.bits == b.bits; }
  friend bool operator!=(SubsetWord a, SubsetWord b) { return a.bits != b.bits; }
};

inline int card(SubsetWord w) { return std::popcount(w.bits); }
inline int diff_count(SubsetWord a, SubsetWord b) { return std::popcount(a.bits & ~b.bits); }
inline bool is_strict_subset(SubsetWord a, SubsetWord b) {
  return (a.bits & ~b.bits) == 0 && a.bits != b.bits;
}

// Normalized family order: ascending (cardinality, numeric bit value).
inline bool family_order_less(SubsetWord a, SubsetWord b) {
  int ca = card(a), cb = card(b);
  return ca != cb ? ca < cb : a.bits < b.bits;
}

SubsetWord subset_from_elements(const GroundSet& ground, const std::vector<int>& elements);
std::vector<int> elements_of(SubsetWord w);

/// Exact binomial coefficient; total on integers (0 when k < 0 or k > n or
/// n < 0). Cached Pascal table up to n = 256, multiplicative beyond.
BigInt binomial(int n, int k);

/// All k-subsets of [n] in ascending numeric order. Guarded at n <= 28 so a
/// full middle level stays within memory (binom(28,14) ~ 4e7).
std::vector<SubsetWord> enumerate_level(int n, int k);

// A duplicate-free list of subsets of a common ground set, held in
// normalized order with a hash index for O(1) expected membership tests.
class SetFamily {
 public:
  SetFamily(GroundSet ground, std::vector<SubsetWord> members);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n(); }
  const std::vector<SubsetWord>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(SubsetWord w) const { return index_.count(w.bits) != 0; }

 private:
  GroundSet ground_;
  std::vector<SubsetWord> members_;
  std::unordered_set<std::uint64_t> index_;
};

// Per-level counts (x_0,...,x_n); exact rationals so the same type carries
// family fingerprints and LP solution vectors.
struct LevelProfile {
  std::vector<Rational> counts;  // length n+1

  int levels() const { return static_cast<int>(counts.size()) - 1; }
  Rational total() const;
  friend bool operator==(const LevelProfile& a, const LevelProfile& b) {
    return a.counts == b.counts;
  }
};

/// counts[i] = number of members of cardinality i; sums to |family|.
LevelProfile profile_of(const SetFamily& family);

/// The family {[n] \ A : A in F}.
SetFamily complement_family(const SetFamily& family);

}  // namespace tiltcube
