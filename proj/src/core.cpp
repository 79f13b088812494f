#include "tiltcube/core.hpp"

#include <algorithm>
#include <mutex>

namespace tiltcube {

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "': " + e.what());
  }
}

std::string format_decimal(const Rational& r, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt num = numerator(r) * scale * 2;
  BigInt den = denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scaled = (num / den + 1) / 2;  // round half away from zero
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

SubsetWord subset_from_elements(const GroundSet& ground, const std::vector<int>& elements) {
  SubsetWord w;
  for (int e : elements) {
    if (e < 1 || e > ground.n())
      throw std::invalid_argument("element " + std::to_string(e) + " outside ground set [1," +
                                  std::to_string(ground.n()) + "]");
    w.bits |= 1ULL << (e - 1);
  }
  return w;
}

std::vector<int> elements_of(SubsetWord w) {
  std::vector<int> out;
  out.reserve(card(w));
  for (std::uint64_t b = w.bits; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

namespace {

constexpr int kPascalMax = 256;

const std::vector<std::vector<BigInt>>& pascal_table() {
  static const std::vector<std::vector<BigInt>> table = [] {
    std::vector<std::vector<BigInt>> t(kPascalMax + 1);
    for (int n = 0; n <= kPascalMax; ++n) {
      t[n].resize(n + 1);
      t[n][0] = t[n][n] = 1;
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n <= kPascalMax) return pascal_table()[n][k];
  // multiplicative form; each partial product is exactly divisible
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::vector<SubsetWord> enumerate_level(int n, int k) {
  if (n < 0 || n > 28)
    throw std::length_error("level enumeration capped at n <= 28, got n=" + std::to_string(n));
  std::vector<SubsetWord> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(SubsetWord{0});
    return out;
  }
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  std::uint64_t v = (1ULL << k) - 1;
  std::uint64_t limit = 1ULL << n;
  while (v < limit) {
    out.push_back(SubsetWord{v});
    // Gosper's hack: next k-subset in numeric order
    std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

SetFamily::SetFamily(GroundSet ground, std::vector<SubsetWord> members)
    : ground_(ground), members_(std::move(members)) {
  for (SubsetWord w : members_) {
    if ((w.bits & ~ground_.mask()) != 0)
      throw std::invalid_argument("family member has elements outside the ground set");
  }
  std::sort(members_.begin(), members_.end(),
            [](SubsetWord a, SubsetWord b) { return family_order_less(a, b); });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  index_.reserve(members_.size() * 2);
  for (SubsetWord w : members_) index_.insert(w.bits);
}

Rational LevelProfile::total() const {
  Rational sum = 0;
  for (const Rational& c : counts) sum += c;
  return sum;
}

LevelProfile profile_of(const SetFamily& family) {
  LevelProfile profile;
  profile.counts.assign(family.n() + 1, Rational(0));
  for (SubsetWord w : family.members()) profile.counts[card(w)] += 1;
  return profile;
}

SetFamily complement_family(const SetFamily& family) {
  std::vector<SubsetWord> flipped;
  flipped.reserve(family.size());
  std::uint64_t mask = family.ground().mask();
  for (SubsetWord w : family.members()) flipped.push_back(SubsetWord{~w.bits & mask});
  return SetFamily(family.ground(), std::move(flipped));
}

}  // namespace tiltcube
