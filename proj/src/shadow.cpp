#include "tiltcube/shadow.hpp"

#include <unordered_set>

namespace tiltcube {

namespace {

// Visit every |A|-k subset of the set bits of `source` (deletion of a
// k-subset) via recursion over the deletable positions.
template <typename Fn>
void for_each_deletion(SubsetWord source, int k, Fn&& visit) {
  std::vector<int> positions;
  for (std::uint64_t b = source.bits; b != 0; b &= b - 1)
    positions.push_back(std::countr_zero(b));
  const int size = static_cast<int>(positions.size());
  if (k > size) return;
  std::vector<int> choose(k);
  for (int i = 0; i < k; ++i) choose[i] = i;
  for (;;) {
    std::uint64_t removed = 0;
    for (int i : choose) removed |= 1ULL << positions[i];
    visit(SubsetWord{source.bits & ~removed});
    int idx = k - 1;
    while (idx >= 0 && choose[idx] == size - k + idx) --idx;
    if (idx < 0) break;
    ++choose[idx];
    for (int i = idx + 1; i < k; ++i) choose[i] = choose[i - 1] + 1;
  }
}

}  // namespace

ShadowResult k_shadow(const SetFamily& family, int k) {
  if (k < 0) throw std::invalid_argument("shadow order must be >= 0");
  LevelProfile profile = profile_of(family);
  BigInt expected = 0, work = 0;
  for (int i = 0; i <= family.n(); ++i) {
    BigInt per_member = binomial(i, k);
    expected += per_member * numerator(profile.counts[i]);
  }
  work = expected;
  if (work > 50'000'000) throw std::length_error("shadow enumeration exceeds 5e7 deletions");

  std::unordered_set<std::uint64_t> seen;
  std::vector<SubsetWord> members;
  for (SubsetWord w : family.members()) {
    for_each_deletion(w, k, [&](SubsetWord d) {
      if (seen.insert(d.bits).second) members.push_back(d);
    });
  }
  ShadowResult result{SetFamily(family.ground(), std::move(members)), k, std::move(profile),
                      std::move(expected), false};
  result.identity_holds = BigInt(result.shadow.size()) == result.identity_sum;
  return result;
}

AntichainCheck is_antichain(const SetFamily& family) {
  const auto& members = family.members();  // normalized: cardinality ascending
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (is_strict_subset(members[i], members[j]))
        return {false, std::make_pair(members[i], members[j])};
    }
  }
  return {true, std::nullopt};
}

}  // namespace tiltcube
