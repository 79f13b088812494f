#include "tiltcube/predicates.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace tiltcube {

namespace {

int parse_int_field(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

ConflictPredicate ConflictPredicate::ratio(int p, int q) {
  if (p < 1 || q < 1 || p >= q) throw std::invalid_argument("ratio requires 0 < p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("ratio requires coprime p, q");
  return ConflictPredicate(PredicateKind::ratio, p, q, 0);
}

ConflictPredicate ConflictPredicate::exact_distance(int k) {
  if (k < 0) throw std::invalid_argument("distance must be >= 0");
  return ConflictPredicate(PredicateKind::exact_distance, 0, 0, k);
}

ConflictPredicate ConflictPredicate::at_most_distance(int k) {
  if (k < 0) throw std::invalid_argument("distance must be >= 0");
  return ConflictPredicate(PredicateKind::at_most_distance, 0, 0, k);
}

ConflictPredicate ConflictPredicate::comparability() {
  return ConflictPredicate(PredicateKind::comparability, 0, 0, 0);
}

std::string ConflictPredicate::to_string() const {
  switch (kind_) {
    case PredicateKind::ratio:
      return "ratio:" + std::to_string(p_) + ":" + std::to_string(q_);
    case PredicateKind::exact_distance:
      return "dist:" + std::to_string(k_);
    case PredicateKind::at_most_distance:
      return "distle:" + std::to_string(k_);
    case PredicateKind::comparability:
      return "antichain";
  }
  return {};
}

ConflictPredicate ConflictPredicate::parse(std::string_view text) {
  if (text == "antichain") return comparability();
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  if (head == "ratio") {
    if (colon == std::string_view::npos) throw std::invalid_argument("ratio needs ratio:P:Q");
    std::string_view rest = text.substr(colon + 1);
    auto colon2 = rest.find(':');
    if (colon2 == std::string_view::npos) throw std::invalid_argument("ratio needs ratio:P:Q");
    return ratio(parse_int_field(rest.substr(0, colon2), "p"),
                 parse_int_field(rest.substr(colon2 + 1), "q"));
  }
  if (head == "dist" && colon != std::string_view::npos)
    return exact_distance(parse_int_field(text.substr(colon + 1), "k"));
  if (head == "distle" && colon != std::string_view::npos)
    return at_most_distance(parse_int_field(text.substr(colon + 1), "k"));
  throw std::invalid_argument("unknown predicate '" + std::string(text) +
                              "' (expected ratio:P:Q | dist:K | distle:K | antichain)");
}

bool pair_conflicts(SubsetWord a, SubsetWord b, const ConflictPredicate& predicate) {
  if (a == b) throw std::invalid_argument("pair_conflicts requires distinct sets");
  switch (predicate.kind()) {
    case PredicateKind::ratio:
      return predicate.p() * diff_count(a, b) == predicate.q() * diff_count(b, a);
    case PredicateKind::exact_distance:
      return diff_count(a, b) == predicate.k();
    case PredicateKind::at_most_distance:
      return diff_count(a, b) <= predicate.k();
    case PredicateKind::comparability:
      return is_strict_subset(a, b);
  }
  return false;
}

namespace {

int thread_override() {
  if (const char* env = std::getenv("TILTCUBE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 0;
}

VerificationReport verify_pairwise(const SetFamily& family, const ConflictPredicate& predicate,
                                   std::size_t max_violations) {
  const auto& members = family.members();
  const std::size_t count = members.size();
  if (count > 0 && count > 1'000'000'000 / count)
    throw std::length_error("pairwise verification guard: |F|^2 exceeds 1e9");

  VerificationReport report;
  report.strategy = VerifyStrategy::pairwise;

  auto scan_rows = [&](std::size_t row_begin, std::size_t row_end,
                       std::vector<std::pair<SubsetWord, SubsetWord>>& out) {
    for (std::size_t i = row_begin; i < row_end; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        if (i == j) continue;
        if (pair_conflicts(members[i], members[j], predicate)) {
          if (out.size() < max_violations) out.emplace_back(members[i], members[j]);
        }
      }
    }
  };

  int threads = thread_override();
  if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, 16);
  if (count * count < 4'000'000 || threads == 1) {
    scan_rows(0, count, report.violations);
  } else {
    std::size_t blocks = std::min<std::size_t>(threads, count);
    std::vector<std::vector<std::pair<SubsetWord, SubsetWord>>> found(blocks);
    std::vector<std::thread> pool;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::size_t lo = count * b / blocks, hi = count * (b + 1) / blocks;
      pool.emplace_back(scan_rows, lo, hi, std::ref(found[b]));
    }
    for (auto& t : pool) t.join();
    for (auto& block : found)
      for (auto& v : block)
        if (report.violations.size() < max_violations) report.violations.push_back(v);
  }
  report.valid = report.violations.empty();
  return report;
}

// Canonical witness pair for a conflicting level pair (u <= v): A = [v],
// B = {1..u-t} + {v+1..v+t}, so |A\B| = v-u+t and |B\A| = t.
std::pair<SubsetWord, SubsetWord> level_witness(int u, int v, int p, int q) {
  int t = p * (v - u) / (q - p);
  SubsetWord a{v == 0 ? 0 : (v == 64 ? ~0ULL : (1ULL << v) - 1)};
  std::uint64_t shared = (u - t) == 0 ? 0 : (1ULL << (u - t)) - 1;
  std::uint64_t outside = ((t == 0 ? 0 : (1ULL << t) - 1)) << v;
  return {a, SubsetWord{shared | outside}};
}

VerificationReport verify_level_shortcut(const SetFamily& family,
                                         const ConflictPredicate& predicate,
                                         std::size_t max_violations) {
  if (predicate.kind() != PredicateKind::ratio)
    throw std::invalid_argument("level-shortcut verification requires a ratio predicate");
  LevelProfile profile = profile_of(family);
  std::vector<int> levels;
  for (int i = 0; i <= family.n(); ++i) {
    if (profile.counts[i] == 0) continue;
    if (profile.counts[i] != Rational(binomial(family.n(), i)))
      throw std::invalid_argument("level-shortcut requires an exact union of full levels");
    levels.push_back(i);
  }
  VerificationReport report;
  report.strategy = VerifyStrategy::level_shortcut;
  for (std::size_t x = 0; x < levels.size(); ++x) {
    for (std::size_t y = x + 1; y < levels.size(); ++y) {
      if (level_conflict_ratio(levels[x], levels[y], family.n(), predicate.p(), predicate.q())) {
        if (report.violations.size() < max_violations)
          report.violations.push_back(
              level_witness(levels[x], levels[y], predicate.p(), predicate.q()));
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace

VerificationReport verify_family(const SetFamily& family, const ConflictPredicate& predicate,
                                 VerifyStrategy strategy, std::size_t max_violations) {
  if (strategy == VerifyStrategy::pairwise)
    return verify_pairwise(family, predicate, max_violations);
  return verify_level_shortcut(family, predicate, max_violations);
}

bool level_conflict_ratio(int u, int v, int n, int p, int q) {
  if (u < 0 || v < 0 || u > n || v > n) throw std::invalid_argument("levels must lie in [0,n]");
  if (u == v) return false;  // equal levels force |A\B| = |B\A|, so t = 0 and A = B
  int lo = std::min(u, v), hi = std::max(u, v);
  int w = hi - lo;
  if (w % (q - p) != 0) return false;
  int t = p * w / (q - p);
  return t <= lo && hi + t <= n;
}

ConflictGraph conflict_graph(int n, const ConflictPredicate& predicate,
                             std::optional<LevelRange> universe, std::size_t max_vertices) {
  GroundSet ground(n);
  int lo = 0, hi = n;
  if (universe) {
    lo = std::max(0, universe->lo);
    hi = std::min(n, universe->hi);
  }
  BigInt vertex_count = 0;
  for (int i = lo; i <= hi; ++i) vertex_count += binomial(n, i);
  if (vertex_count > BigInt(max_vertices))
    throw std::length_error("conflict graph universe exceeds " + std::to_string(max_vertices) +
                            " vertices");

  ConflictGraph graph;
  graph.n = n;
  if (!universe && n <= 63) {
    graph.vertices.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
      graph.vertices.push_back(SubsetWord{b});
  } else {
    for (int i = lo; i <= hi; ++i) {
      if (n > 28) throw std::length_error("level enumeration capped at n <= 28");
      auto level = enumerate_level(n, i);
      graph.vertices.insert(graph.vertices.end(), level.begin(), level.end());
    }
  }
  std::sort(graph.vertices.begin(), graph.vertices.end(),
            [](SubsetWord a, SubsetWord b) { return family_order_less(a, b); });

  const std::size_t count = graph.vertices.size();
  graph.adjacency.assign(count, {});
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      SubsetWord a = graph.vertices[i], b = graph.vertices[j];
      if (pair_conflicts(a, b, predicate) || pair_conflicts(b, a, predicate)) {
        graph.adjacency[i].push_back(static_cast<std::uint32_t>(j));
        graph.adjacency[j].push_back(static_cast<std::uint32_t>(i));
        ++graph.edge_count;
      }
    }
  }
  return graph;
}

}  // namespace tiltcube
