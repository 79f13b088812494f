#include "tiltcube/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace tiltcube {

namespace {

constexpr int kEnumerationCapN = 28;

void check_enumeration_cap(int n) {
  if (n > kEnumerationCapN)
    throw std::length_error("full-level enumeration capped at n <= " +
                            std::to_string(kEnumerationCapN) + ", got n=" + std::to_string(n));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int parse_int_field(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

LevelIndexSet index_set(int n) {
  if (n % 2 != 0) throw std::invalid_argument("index set recursion needs even n");
  if (n < 2 || n > 256) throw std::invalid_argument("index set supported for 2 <= n <= 256");
  LevelIndexSet result;
  result.n = n;
  for (int a = n / 2; a >= 0; a = (a + 1) / 2 - 1) result.a_chain.push_back(a);
  for (int b = n / 2; b <= n; b = (b + n) / 2 + 1) result.b_chain.push_back(b);
  std::set<int> merged(result.a_chain.begin(), result.a_chain.end());
  merged.insert(result.b_chain.begin(), result.b_chain.end());
  result.levels.assign(merged.begin(), merged.end());
  return result;
}

SetFamily build_level_union(int n, const std::vector<int>& levels) {
  GroundSet ground(n);
  check_enumeration_cap(n);
  std::vector<SubsetWord> members;
  std::set<int> wanted(levels.begin(), levels.end());
  for (int level : wanted) {
    if (level < 0 || level > n)
      throw std::invalid_argument("level " + std::to_string(level) + " outside [0," +
                                  std::to_string(n) + "]");
    auto block = enumerate_level(n, level);
    members.insert(members.end(), block.begin(), block.end());
  }
  return SetFamily(ground, std::move(members));
}

SetFamily build_b0(int n) { return build_level_union(n, index_set(n).levels); }

BigInt b0_size(int n) {
  BigInt total = 0;
  for (int level : index_set(n).levels) total += binomial(n, level);
  return total;
}

SetFamily build_interval_family(int n, int p, int q, std::optional<int> anchor) {
  GroundSet ground(n);
  if (p < 1 || p >= q || std::gcd(p, q) != 1)
    throw std::invalid_argument("interval family needs coprime p < q");
  int length = q - p;
  if (length - 1 > n) throw std::invalid_argument("interval of length q-p does not fit in [0,n]");
  int start;
  if (anchor) {
    start = *anchor;
    if (start < 0 || start + length - 1 > n)
      throw std::invalid_argument("anchored interval does not fit in [0,n]");
  } else {
    start = std::clamp(n / 2, 0, n - (length - 1));
  }
  std::vector<int> levels(length);
  for (int i = 0; i < length; ++i) levels[i] = start + i;
  return build_level_union(n, levels);
}

ModularFamilyResult build_modular_family(int n, std::optional<int> r) {
  GroundSet ground(n);
  check_enumeration_cap(n);
  if (r && (*r < 0 || *r >= n)) throw std::invalid_argument("residue must lie in [0,n)");
  auto middle = enumerate_level(n, n / 2);
  std::vector<std::vector<SubsetWord>> by_residue(n);
  for (SubsetWord w : middle) {
    int sum = 0;
    for (int e : elements_of(w)) sum += e;
    by_residue[sum % n].push_back(w);
  }
  int chosen = 0;
  if (r) {
    chosen = *r;
  } else {
    for (int cand = 1; cand < n; ++cand)
      if (by_residue[cand].size() > by_residue[chosen].size()) chosen = cand;
  }
  return {SetFamily(ground, std::move(by_residue[chosen])), chosen};
}

SetFamily build_power_sum_family(int n, int k) {
  GroundSet ground(n);
  check_enumeration_cap(n);
  if (!is_prime(n)) throw std::invalid_argument("power-sum family needs prime n");
  if (k < 1) throw std::invalid_argument("power-sum family needs k >= 1");
  // i^d mod n for i in [1,n], d in [1,k]
  std::vector<std::vector<int>> power(n + 1, std::vector<int>(k + 1, 1));
  for (int i = 1; i <= n; ++i)
    for (int d = 1; d <= k; ++d) power[i][d] = static_cast<int>((std::int64_t)power[i][d - 1] * i % n);

  std::vector<SubsetWord> members;
  for (SubsetWord w : enumerate_level(n, n / 2)) {
    bool all_zero = true;
    for (int d = 1; d <= k && all_zero; ++d) {
      int sum = 0;
      for (int e : elements_of(w)) sum = (sum + power[e][d]) % n;
      all_zero = sum == 0;
    }
    if (all_zero) members.push_back(w);
  }
  return SetFamily(ground, std::move(members));
}

ConstructionRequest parse_construction(std::string_view text) {
  ConstructionRequest req{};
  if (text == "b0") {
    req.kind = ConstructionRequest::Kind::b0;
    return req;
  }
  if (text == "modular") {
    req.kind = ConstructionRequest::Kind::modular;
    return req;
  }
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "levels" && !rest.empty()) {
    req.kind = ConstructionRequest::Kind::level_union;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      auto piece = rest.substr(pos, comma == std::string_view::npos ? rest.size() - pos : comma - pos);
      req.levels.push_back(parse_int_field(piece, "level"));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return req;
  }
  if (head == "interval" && !rest.empty()) {
    req.kind = ConstructionRequest::Kind::interval;
    auto c1 = rest.find(':');
    if (c1 == std::string_view::npos) throw std::invalid_argument("interval needs interval:p:q[:anchor]");
    req.p = parse_int_field(rest.substr(0, c1), "p");
    auto tail = rest.substr(c1 + 1);
    auto c2 = tail.find(':');
    if (c2 == std::string_view::npos) {
      req.q = parse_int_field(tail, "q");
    } else {
      req.q = parse_int_field(tail.substr(0, c2), "q");
      req.anchor = parse_int_field(tail.substr(c2 + 1), "anchor");
    }
    return req;
  }
  if (head == "modular" && !rest.empty()) {
    req.kind = ConstructionRequest::Kind::modular;
    req.residue = parse_int_field(rest, "residue");
    return req;
  }
  if (head == "powersum" && !rest.empty()) {
    req.kind = ConstructionRequest::Kind::power_sum;
    req.k = parse_int_field(rest, "k");
    return req;
  }
  throw std::invalid_argument(
      "unknown construction '" + std::string(text) +
      "' (expected b0 | levels:0,2,4 | interval:p:q[:anchor] | modular[:r] | powersum:k)");
}

BuiltConstruction build_construction(const ConstructionRequest& request, int n) {
  switch (request.kind) {
    case ConstructionRequest::Kind::b0:
      return {build_b0(n), "b0", std::nullopt};
    case ConstructionRequest::Kind::level_union:
      return {build_level_union(n, request.levels), "levels", std::nullopt};
    case ConstructionRequest::Kind::interval:
      return {build_interval_family(n, request.p, request.q, request.anchor), "interval",
              std::nullopt};
    case ConstructionRequest::Kind::modular: {
      auto result = build_modular_family(n, request.residue);
      return {std::move(result.family), "modular", result.residue};
    }
    case ConstructionRequest::Kind::power_sum:
      return {build_power_sum_family(n, request.k), "powersum", std::nullopt};
  }
  throw std::logic_error("unreachable construction kind");
}

}  // namespace tiltcube
