#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tiltcube/core.hpp"

using namespace tiltcube;

TEST_CASE("binomial spot values") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(64, 0) == 1);
  CHECK(binomial(16, 8) == BigInt(oracle::pascal_u64(16, 8)));
  CHECK(binomial(16, 8) == 12870);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-2, 0) == 0);
}

TEST_CASE("binomial matches the additive oracle on full rows") {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == BigInt(oracle::pascal_u64(n, k)));
}

TEST_CASE("Pascal identity holds for all 0 < k < n <= 64") {
  for (int n = 1; n <= 64; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial beyond the table stays consistent with Pascal") {
  CHECK(binomial(257, 1) == 257);
  CHECK(binomial(260, 130) == binomial(259, 129) + binomial(259, 130));
}

TEST_CASE("subset words round-trip elements") {
  GroundSet g(6);
  SubsetWord w = subset_from_elements(g, {2, 5, 6});
  CHECK(card(w) == 3);
  CHECK(elements_of(w) == std::vector<int>{2, 5, 6});
  CHECK_THROWS_AS(subset_from_elements(g, {7}), std::invalid_argument);
  CHECK_THROWS_AS(subset_from_elements(g, {0}), std::invalid_argument);
}

TEST_CASE("set difference counts") {
  GroundSet g(4);
  SubsetWord a = subset_from_elements(g, {1, 2});
  SubsetWord b = subset_from_elements(g, {3});
  CHECK(diff_count(a, b) == 2);
  CHECK(diff_count(b, a) == 1);
  CHECK(is_strict_subset(subset_from_elements(g, {1}), a));
  CHECK_FALSE(is_strict_subset(a, a));
}

TEST_CASE("family normalizes, deduplicates and indexes members") {
  GroundSet g(3);
  std::vector<SubsetWord> raw{subset_from_elements(g, {1, 2}), subset_from_elements(g, {3}),
                              subset_from_elements(g, {1, 2}), SubsetWord{0}};
  SetFamily f(g, raw);
  CHECK(f.size() == 3);
  CHECK(card(f.members()[0]) == 0);
  CHECK(f.members()[1] == subset_from_elements(g, {3}));
  CHECK(f.contains(subset_from_elements(g, {1, 2})));
  CHECK_FALSE(f.contains(subset_from_elements(g, {1})));
}

TEST_CASE("family rejects members outside the ground set") {
  GroundSet g(3);
  CHECK_THROWS_AS(SetFamily(g, {SubsetWord{1ULL << 5}}), std::invalid_argument);
}

TEST_CASE("profile_of counts per level") {
  GroundSet g5(5);
  CHECK(profile_of(SetFamily(g5, {})).counts ==
        std::vector<Rational>{0, 0, 0, 0, 0, 0});

  GroundSet g2(2);
  std::vector<SubsetWord> all;
  for (std::uint64_t b = 0; b < 4; ++b) all.push_back(SubsetWord{b});
  CHECK(profile_of(SetFamily(g2, all)).counts == std::vector<Rational>{1, 2, 1});
}

TEST_CASE("profile totals match family size and respect level capacities") {
  GroundSet g(5);
  std::vector<SubsetWord> members;
  for (std::uint64_t b = 0; b < 32; b += 3) members.push_back(SubsetWord{b});
  SetFamily f(g, members);
  LevelProfile p = profile_of(f);
  CHECK(p.total() == Rational(f.size()));
  for (int i = 0; i <= 5; ++i) CHECK(p.counts[i] <= Rational(binomial(5, i)));
}

TEST_CASE("enumerate_level produces each level exactly once") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto level = enumerate_level(n, k);
      auto expect = oracle::level_masks(n, k);
      REQUIRE(level.size() == expect.size());
      for (std::size_t i = 0; i < level.size(); ++i) CHECK(level[i].bits == expect[i]);
    }
  }
  CHECK_THROWS_AS(enumerate_level(29, 2), std::length_error);
}

TEST_CASE("rational format/parse round-trip") {
  CHECK(format_rational(Rational(10)) == "10/1");
  CHECK(format_rational(Rational(3, 6)) == "1/2");
  CHECK(parse_rational("10/1") == Rational(10));
  CHECK(parse_rational("-7/3") == Rational(-7, 3));
  CHECK(parse_rational("42") == Rational(42));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);

  for (int num = -12; num <= 12; ++num)
    for (int den = 1; den <= 9; ++den) {
      Rational r(num, den);
      CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("decimal rendering of exact ratios") {
  CHECK(format_decimal(Rational(1, 2), 6) == "0.500000");
  CHECK(format_decimal(Rational(4, 3), 3) == "1.333");
  CHECK(format_decimal(Rational(2, 3), 3) == "0.667");
  CHECK(format_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(format_decimal(Rational(5), 0) == "5");
}

TEST_CASE("complement flips every member within the ground set") {
  GroundSet g(4);
  SetFamily f(g, {subset_from_elements(g, {1}), subset_from_elements(g, {2, 3})});
  SetFamily c = complement_family(f);
  CHECK(c.contains(subset_from_elements(g, {2, 3, 4})));
  CHECK(c.contains(subset_from_elements(g, {1, 4})));
  CHECK(c.size() == f.size());
}

TEST_CASE("ground set bounds") {
  CHECK_THROWS_AS(GroundSet(0), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet(65), std::invalid_argument);
  CHECK(GroundSet(64).mask() == ~0ULL);
  CHECK(GroundSet(5).mask() == 0b11111);
}
