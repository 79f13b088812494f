#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tiltcube/constructions.hpp"
#include "tiltcube/shadow.hpp"

using namespace tiltcube;

namespace {

SetFamily family_of(int n, std::vector<std::vector<int>> sets) {
  GroundSet g(n);
  std::vector<SubsetWord> members;
  for (auto& s : sets) members.push_back(subset_from_elements(g, s));
  return SetFamily(g, std::move(members));
}

}  // namespace

TEST_CASE("shadow of a single set lists its deletions") {
  ShadowResult result = k_shadow(family_of(3, {{1, 2, 3}}), 1);
  CHECK(result.shadow.size() == 3);
  CHECK(result.shadow.contains(subset_from_elements(GroundSet(3), {1, 2})));
  CHECK(result.shadow.contains(subset_from_elements(GroundSet(3), {1, 3})));
  CHECK(result.shadow.contains(subset_from_elements(GroundSet(3), {2, 3})));
  CHECK(result.identity_holds);
}

TEST_CASE("zero-shadow is the family itself") {
  SetFamily family = family_of(4, {{1}, {2, 3}});
  ShadowResult result = k_shadow(family, 0);
  CHECK(result.shadow.members() == family.members());
  CHECK(result.identity_holds);
}

TEST_CASE("shadow of the modular pair") {
  ShadowResult result = k_shadow(family_of(5, {{1, 4}, {2, 3}}), 1);
  CHECK(result.shadow.size() == 4);
  CHECK(result.identity_sum == 4);
  CHECK(result.identity_holds);
  for (SubsetWord w : result.shadow.members()) CHECK(card(w) == 1);
}

TEST_CASE("identity fails when deletions collide across members") {
  // {1,2,3,4} and {1,2,5,6} share the 2-deletion {1,2}
  ShadowResult result = k_shadow(family_of(6, {{1, 2, 3, 4}, {1, 2, 5, 6}}), 2);
  CHECK(result.identity_sum == 12);
  CHECK(result.shadow.size() < 12);
  CHECK_FALSE(result.identity_holds);
}

TEST_CASE("identity uses unordered deletion counts") {
  // a valid distance->2 family: both directions of every pair exceed 2
  SetFamily family = family_of(6, {{1, 2, 3}, {4, 5, 6}});
  ShadowResult result = k_shadow(family, 2);
  // binom(3,2) per member, not the ordered count 3*2
  CHECK(result.identity_sum == 6);
  CHECK(result.shadow.size() == 6);
  CHECK(result.identity_holds);
  CHECK(is_antichain(result.shadow).antichain);
  CHECK(BigInt(result.shadow.size()) <= binomial(6, 3));
}

TEST_CASE("members smaller than k contribute nothing") {
  ShadowResult result = k_shadow(family_of(4, {{1}, {1, 2, 3}}), 2);
  CHECK(result.identity_sum == 3);
  CHECK(result.shadow.size() == 3);
}

TEST_CASE("antichain check finds containment witnesses") {
  AntichainCheck ok = is_antichain(family_of(3, {{1}, {2}}));
  CHECK(ok.antichain);
  CHECK_FALSE(ok.witness.has_value());

  AntichainCheck bad = is_antichain(family_of(3, {{1}, {1, 2}}));
  CHECK_FALSE(bad.antichain);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == subset_from_elements(GroundSet(3), {1}));
  CHECK(bad.witness->second == subset_from_elements(GroundSet(3), {1, 2}));
  CHECK(is_strict_subset(bad.witness->first, bad.witness->second));
}

TEST_CASE("shadow is monotone in the source family") {
  std::mt19937_64 rng(3);
  GroundSet g(8);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<SubsetWord> members, sub;
    for (int i = 0; i < 12; ++i) {
      SubsetWord w{rng() & g.mask()};
      members.push_back(w);
      if (rng() & 1) sub.push_back(w);
    }
    SetFamily family(g, members), subfamily(g, sub);
    for (int k = 1; k <= 2; ++k) {
      ShadowResult big = k_shadow(family, k);
      ShadowResult small = k_shadow(subfamily, k);
      for (SubsetWord w : small.shadow.members()) CHECK(big.shadow.contains(w));
    }
  }
}

TEST_CASE("shadow guard rejects oversized enumerations") {
  CHECK_THROWS_AS(k_shadow(build_level_union(22, {11}), 3), std::length_error);
}
