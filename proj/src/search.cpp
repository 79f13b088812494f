#include "tiltcube/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "tiltcube/bounds.hpp"
#include "tiltcube/detail/rng.hpp"

namespace tiltcube {

namespace {

// Minimal dynamic bitset sized to the vertex universe.
struct Bitset {
  std::vector<std::uint64_t> words;

  explicit Bitset(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) { words[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (auto w : words)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }
  std::ptrdiff_t first() const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i]) return static_cast<std::ptrdiff_t>(i * 64 + std::countr_zero(words[i]));
    return -1;
  }
  void and_not(const Bitset& other) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= ~other.words[i];
  }
  void and_with(const Bitset& other) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= other.words[i];
  }
  std::size_t intersection_count(const Bitset& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words.size(); ++i)
      c += std::popcount(words[i] & other.words[i]);
    return c;
  }
};

struct Searcher {
  const ConflictGraph& graph;
  const SearchBudget& budget;
  std::vector<Bitset> adjacency;
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> best;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::chrono::steady_clock::time_point deadline;

  // window LP relaxation over remaining per-level candidate counts
  bool use_lp = false;
  std::vector<Window> lp_windows;
  std::map<std::vector<int>, std::size_t> lp_cache;

  Searcher(const ConflictGraph& g, const ConflictPredicate& predicate, const SearchBudget& b)
      : graph(g), budget(b) {
    adjacency.assign(g.vertices.size(), Bitset(g.vertices.size()));
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      for (std::uint32_t u : g.adjacency[v]) adjacency[v].set(u);
    if (predicate.kind() == PredicateKind::ratio && g.vertices.size() >= 24) {
      use_lp = true;
      lp_windows = predicate.p() == 1 && predicate.q() == 2
                       ? window_sets_12(g.n)
                       : window_sets_pq(g.n, predicate.p(), predicate.q());
    }
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(b.time_limit_seconds));
  }

  std::size_t clique_cover_ub(const Bitset& cand) const {
    Bitset work = cand;
    std::size_t cliques = 0;
    while (true) {
      std::ptrdiff_t v = work.first();
      if (v < 0) break;
      work.reset(v);
      Bitset common = work;
      common.and_with(adjacency[v]);
      for (std::ptrdiff_t u = common.first(); u >= 0; u = common.first()) {
        work.reset(u);
        common.and_with(adjacency[u]);
      }
      ++cliques;
    }
    return cliques;
  }

  std::size_t lp_level_ub(const Bitset& cand) {
    std::vector<int> per_level(graph.n + 1, 0);
    for (std::size_t v = 0; v < graph.vertices.size(); ++v)
      if (cand.test(v)) ++per_level[card(graph.vertices[v])];
    auto [it, fresh] = lp_cache.try_emplace(per_level, 0);
    if (fresh) {
      LinearProgram lp;
      lp.n = graph.n;
      lp.windows = lp_windows;
      for (int j = 0; j <= graph.n; ++j) lp.box.emplace_back(per_level[j]);
      Rational opt = solve_lp_exact(lp).optimum;
      it->second = static_cast<std::size_t>(numerator(opt) / denominator(opt));
    }
    return it->second;
  }

  std::uint32_t branch_vertex(const Bitset& cand) const {
    if (budget.deterministic) return static_cast<std::uint32_t>(cand.first());
    std::size_t best_deg = 0;
    std::ptrdiff_t pick = cand.first();
    for (std::size_t v = pick < 0 ? 0 : pick; v < graph.vertices.size(); ++v) {
      if (!cand.test(v)) continue;
      std::size_t deg = adjacency[v].intersection_count(cand);
      if (deg > best_deg) {
        best_deg = deg;
        pick = static_cast<std::ptrdiff_t>(v);
      }
    }
    return static_cast<std::uint32_t>(pick);
  }

  void dfs(Bitset cand) {
    if (aborted) return;
    if ((++nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
      aborted = true;
      return;
    }
    if (!cand.any()) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    std::size_t potential = chosen.size() + cand.count();
    if (potential <= best.size()) return;
    if (chosen.size() + clique_cover_ub(cand) <= best.size()) return;
    if (use_lp && cand.count() >= 24 && chosen.size() + lp_level_ub(cand) <= best.size()) return;

    std::uint32_t v = branch_vertex(cand);
    Bitset with_v = cand;
    with_v.and_not(adjacency[v]);
    with_v.reset(v);
    chosen.push_back(v);
    dfs(std::move(with_v));
    chosen.pop_back();
    if (aborted) return;
    cand.reset(v);
    dfs(std::move(cand));
  }
};

}  // namespace

SearchResult max_family(int n, const ConflictPredicate& predicate, const SearchBudget& budget) {
  if (n >= 1 && n < 63 && (std::uint64_t{1} << n) > budget.max_universe)
    throw std::length_error("search universe 2^n exceeds the budget");
  ConflictGraph graph = conflict_graph(n, predicate, std::nullopt, budget.max_universe);
  Searcher searcher(graph, predicate, budget);

  // greedy start: lexicographically least maximal independent set
  Bitset all(graph.vertices.size());
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) all.set(v);
  {
    Bitset avail = all;
    for (std::ptrdiff_t v = avail.first(); v >= 0; v = avail.first()) {
      searcher.best.push_back(static_cast<std::uint32_t>(v));
      avail.and_not(searcher.adjacency[v]);
      avail.reset(v);
    }
  }

  searcher.dfs(all);

  std::vector<SubsetWord> members;
  members.reserve(searcher.best.size());
  for (std::uint32_t v : searcher.best) members.push_back(graph.vertices[v]);
  SearchResult result{searcher.best.size(), SetFamily(GroundSet(n), std::move(members)),
                      searcher.aborted ? SearchStatus::lower_bound_only
                                       : SearchStatus::proved_optimal,
                      searcher.nodes};
  if (!verify_family(result.witness, predicate).valid)
    throw std::logic_error("search produced an invalid witness");
  return result;
}

SetFamily greedy_family(int n, const ConflictPredicate& predicate, std::uint64_t seed,
                        std::size_t max_universe) {
  GroundSet ground(n);
  if (n < 63 && (std::uint64_t{1} << n) > max_universe)
    throw std::length_error("greedy universe 2^n exceeds the budget");
  std::vector<std::uint64_t> order(std::uint64_t{1} << n);
  for (std::uint64_t b = 0; b < order.size(); ++b) order[b] = b;
  std::mt19937_64 rng(detail::splitmix64(seed));
  detail::fisher_yates(order, rng);

  std::vector<SubsetWord> chosen;
  for (std::uint64_t bits : order) {
    SubsetWord w{bits};
    bool compatible = true;
    for (SubsetWord c : chosen) {
      if (pair_conflicts(w, c, predicate) || pair_conflicts(c, w, predicate)) {
        compatible = false;
        break;
      }
    }
    if (compatible) chosen.push_back(w);
  }
  return SetFamily(ground, std::move(chosen));
}

}  // namespace tiltcube
