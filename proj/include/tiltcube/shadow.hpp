#pragma once

// k-shadows (all k-element deletions), the antichain test, and the
// shadow-count identity.

#include <optional>
#include <utility>

#include "tiltcube/core.hpp"

namespace tiltcube {

struct ShadowResult {
  SetFamily shadow;
  int k = 0;
  LevelProfile source_profile;
  BigInt identity_sum;        // sum over levels of binom(i, k) * |F_i|
  bool identity_holds = false;  // |shadow| == identity_sum
};

/// Deduplicated union of A \ C over members A and k-subsets C of A. The
/// identity flag records whether no deletion collides across members, the
/// cardinality form of "each shadow element lies in at most one member".
/// Guarded: total deletions must stay within 5e7.
ShadowResult k_shadow(const SetFamily& family, int k);

struct AntichainCheck {
  bool antichain = false;
  std::optional<std::pair<SubsetWord, SubsetWord>> witness;  // (A, B) with A strictly inside B
};

AntichainCheck is_antichain(const SetFamily& family);

}  // namespace tiltcube
