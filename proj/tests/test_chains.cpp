#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "tiltcube/chains.hpp"
#include "tiltcube/constructions.hpp"

using namespace tiltcube;

namespace {

Ordering explicit_ordering(std::vector<int> perm) {
  Ordering ord;
  ord.perm = std::move(perm);
  return ord;
}

SubsetWord word_of(std::vector<int> elems, int n) {
  return subset_from_elements(GroundSet(n), elems);
}

}  // namespace

TEST_CASE("random orderings are seeded permutations") {
  Ordering a = random_ordering(5, 99), b = random_ordering(5, 99);
  CHECK(a.perm == b.perm);
  CHECK(a.seed == 99);
  CHECK(random_ordering(5, 100).perm != a.perm);

  CHECK(random_ordering(1, 7).perm == std::vector<int>{1});

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::vector<int> perm = random_ordering(9, seed).perm;
    std::sort(perm.begin(), perm.end());
    CHECK(perm == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  }
}

TEST_CASE("ordering frequencies are uniform within 5 sigma") {
  const std::uint64_t trials = 100000;
  std::map<std::vector<int>, std::uint64_t> freq;
  for (std::uint64_t t = 0; t < trials; ++t) freq[random_ordering(4, trial_seed(42, t)).perm]++;
  CHECK(freq.size() == 24);
  const double p = 1.0 / 24, sigma = std::sqrt(p * (1 - p) / trials);
  for (const auto& [perm, count] : freq) {
    double observed = static_cast<double>(count) / trials;
    CHECK(std::abs(observed - p) < 5 * sigma);
  }
}

TEST_CASE("trial seeds are deterministic and spread") {
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("half/double chains from an explicit ordering") {
  // n = 6: prefix a = (1,2,3,4), suffix b = (5,6)
  Ordering ord = explicit_ordering({1, 2, 3, 4, 5, 6});
  ChainFamily fam = chain_family_12(ord, 2);
  REQUIRE(fam.chains.size() == 3);
  CHECK(fam.chains[0] == word_of({5, 6}, 6));
  CHECK(fam.chains[1] == word_of({1, 2, 6}, 6));
  CHECK(fam.chains[2] == word_of({1, 2, 3, 4}, 6));
  CHECK(diff_count(fam.chains[2], fam.chains[0]) == 4);
  CHECK(diff_count(fam.chains[0], fam.chains[2]) == 2);

  ChainFamily trivial = chain_family_12(ord, 0);
  REQUIRE(trivial.chains.size() == 1);
  CHECK(trivial.chains[0].bits == 0);

  CHECK_THROWS_AS(chain_family_12(ord, 3), std::invalid_argument);
  CHECK_THROWS_AS(chain_family_12(ord, -1), std::invalid_argument);
}

TEST_CASE("half/double chain structure over seeded orderings") {
  for (int n = 3; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Ordering ord = random_ordering(n, seed);
      const int prefix = (2 * n + 2) / 3;
      for (int l = 0; 3 * l <= n; ++l) {
        ChainFamily fam = chain_family_12(ord, l);
        REQUIRE(fam.chains.size() == static_cast<std::size_t>(l + 1));
        for (int i = 0; i <= l; ++i) CHECK(card(fam.chains[i]) == l + i);
        for (int i = 0; i <= l; ++i) {
          for (int j = i + 1; j <= l; ++j) {
            SubsetWord ci = fam.chains[i], cj = fam.chains[j];
            // the larger chain holds twice the difference of the smaller
            CHECK(diff_count(cj, ci) == 2 * diff_count(ci, cj));
            // set-level identities: C_i \ C_j = {b_{i+1}..b_j},
            //                        C_j \ C_i = {a_{2i+1}..a_{2j}}
            SubsetWord b_block, a_block;
            for (int t = i + 1; t <= j; ++t)
              b_block.bits |= 1ULL << (ord.perm[prefix + t - 1] - 1);
            for (int t = 2 * i + 1; t <= 2 * j; ++t)
              a_block.bits |= 1ULL << (ord.perm[t - 1] - 1);
            CHECK(SubsetWord{ci.bits & ~cj.bits} == b_block);
            CHECK(SubsetWord{cj.bits & ~ci.bits} == a_block);
          }
        }
      }
    }
  }
}

TEST_CASE("ratio p:q chains from an explicit ordering") {
  // n = 3, p = 1, q = 2, k = 0: m = 1, k' = 0, so C_0 = {b_1}, C_1 = {a_1, a_2}
  Ordering ord = explicit_ordering({1, 2, 3});
  ChainFamily fam = chain_family_pq(ord, 1, 2, 0);
  CHECK(fam.m == 1);
  CHECK(fam.k_prime == 0);
  REQUIRE(fam.chains.size() == 2);
  CHECK(fam.chains[0] == word_of({3}, 3));
  CHECK(fam.chains[1] == word_of({1, 2}, 3));
  CHECK(card(fam.chains[0]) == 1);
  CHECK(card(fam.chains[1]) == 2);
}

TEST_CASE("ratio chains with a nonzero class offset drop the top chain") {
  // n = 8, p = 1, q = 3: m = 2 and k = 1 gives k' = 1, so exactly m chains
  ChainFamily fam = chain_family_pq(random_ordering(8, 5), 1, 3, 1);
  CHECK(fam.k_prime == 1);
  REQUIRE(fam.chains.size() == 2);
  CHECK(card(fam.chains[0]) == 3);  // (q-p)i + k' + pm = 2i + 3
  CHECK(card(fam.chains[1]) == 5);
}

TEST_CASE("ratio chain identities over seeded orderings") {
  for (auto [p, q] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 3},
                      std::pair{3, 4}}) {
    for (int n = p + q; n <= 24; n += p + q) {
      for (int k = 0; k <= q - p - 1; ++k) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
          ChainFamily fam = chain_family_pq(random_ordering(n, seed), p, q, k);
          const int m = n / (p + q);
          CHECK(static_cast<int>(fam.chains.size()) == (fam.k_prime == 0 ? m + 1 : m));
          for (std::size_t i = 0; i < fam.chains.size(); ++i) {
            int size = card(fam.chains[i]);
            CHECK(size == (q - p) * static_cast<int>(i) + fam.k_prime + p * m);
            CHECK(size >= (p * n + p + q - 1) / (p + q));
            CHECK(size <= q * n / (p + q));
            CHECK(size % (q - p) == k % (q - p));
            for (std::size_t j = i + 1; j < fam.chains.size(); ++j)
              CHECK(q * diff_count(fam.chains[i], fam.chains[j]) ==
                    p * diff_count(fam.chains[j], fam.chains[i]));
          }
        }
      }
    }
  }
}

TEST_CASE("ratio chain preconditions") {
  Ordering ord = random_ordering(7, 1);
  CHECK_THROWS_AS(chain_family_pq(ord, 1, 2, 0), std::invalid_argument);  // 3 does not divide 7
  Ordering ord6 = random_ordering(6, 1);
  CHECK_THROWS_AS(chain_family_pq(ord6, 1, 2, 1), std::invalid_argument);  // k out of range
  CHECK_THROWS_AS(chain_family_pq(ord6, 2, 4, 0), std::invalid_argument);  // not coprime
}

TEST_CASE("membership probability matches the reciprocal binomial") {
  const std::uint64_t trials = 100000;
  GroundSet g4(4);

  MembershipEstimate one = estimate_membership(4, 1, subset_from_elements(g4, {1}), trials, 2024);
  CHECK(std::abs(one.probability - 0.25) <= 4 * one.std_error);

  MembershipEstimate two =
      estimate_membership(4, 1, subset_from_elements(g4, {1, 2}), trials, 2024);
  CHECK(std::abs(two.probability - 1.0 / 6) <= 4 * two.std_error);

  CHECK_THROWS_AS(estimate_membership(4, 1, subset_from_elements(g4, {1, 2, 3}), trials, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_membership(4, 1, SubsetWord{0}, trials, 1), std::invalid_argument);

  MembershipEstimate rerun =
      estimate_membership(4, 1, subset_from_elements(g4, {1}), 1000, 2024);
  MembershipEstimate rerun2 =
      estimate_membership(4, 1, subset_from_elements(g4, {1}), 1000, 2024);
  CHECK(rerun.hits == rerun2.hits);
}

TEST_CASE("expected hits on a full level is exactly one") {
  HitsEstimate est = expected_hits(build_level_union(5, {1}), 1, 2000, 7);
  CHECK(est.mean == 1.0);
  CHECK(est.std_error == 0.0);
}

TEST_CASE("expected hits is zero on the empty family") {
  SetFamily empty(GroundSet(5), {});
  HitsEstimate est = expected_hits(empty, 1, 500, 7);
  CHECK(est.mean == 0.0);
}

TEST_CASE("expected hits matches the profile sum of reciprocal binomials") {
  // B0(6) restricted to levels [2,4] is exactly the full third level
  SetFamily b0_mid = build_level_union(6, {3});
  HitsEstimate est = expected_hits(b0_mid, 2, 2000, 11);
  CHECK(est.mean == 1.0);

  // two isolated sets: E(X) = 1/binom(6,2) + 1/binom(6,3) = 7/60
  GroundSet g6(6);
  SetFamily two(g6, {subset_from_elements(g6, {1, 2}), subset_from_elements(g6, {1, 2, 3})});
  HitsEstimate mixed = expected_hits(two, 2, 50000, 13);
  CHECK(std::abs(mixed.mean - 7.0 / 60) <= 5 * mixed.std_error);
}

TEST_CASE("expected hits stays below one on valid families") {
  // the 1:2-valid family B0(8): chains at l = 2 meet only level 4
  HitsEstimate est = expected_hits(build_b0(8), 2, 20000, 17);
  CHECK(est.mean <= 1.0 + 4 * est.std_error);
}

TEST_CASE("upper windows are reached by complementing the family") {
  // levels [2k-n, k] for k >= 2n/3 mirror the lower windows: complementing
  // every member maps the window at k onto the lower window at l = n - k,
  // and preserves validity (differences swap roles).
  SetFamily level4 = build_level_union(7, {4});  // sits in the k=5 window [3,5]
  SetFamily flipped = complement_family(level4);
  HitsEstimate exact = expected_hits(flipped, 7 - 5, 2000, 19);
  CHECK(exact.mean == 1.0);

  GroundSet g7(7);
  std::vector<SubsetWord> mixed;  // valid family with members at levels 4 and 5
  mixed.push_back(subset_from_elements(g7, {1, 2, 3, 4}));
  mixed.push_back(subset_from_elements(g7, {1, 2, 3, 4, 5}));
  SetFamily family(g7, mixed);
  HitsEstimate est = expected_hits(complement_family(family), 2, 20000, 23);
  CHECK(est.mean <= 1.0 + 4 * est.std_error);
  CHECK(std::abs(est.mean - (1.0 / 35 + 1.0 / 21)) <= 5 * est.std_error);
}
