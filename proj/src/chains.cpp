#include "tiltcube/chains.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "tiltcube/detail/rng.hpp"

namespace tiltcube {

Ordering random_ordering(int n, std::uint64_t seed) {
  if (n < 1 || n > 64) throw std::invalid_argument("ordering needs 1 <= n <= 64");
  Ordering ord;
  ord.seed = seed;
  ord.perm.resize(n);
  std::iota(ord.perm.begin(), ord.perm.end(), 1);
  std::mt19937_64 rng(seed);
  detail::fisher_yates(ord.perm, rng);
  return ord;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  return detail::splitmix64(master_seed ^ detail::splitmix64(index + 1));
}

ChainFamily chain_family_12(const Ordering& ordering, int l) {
  const int n = static_cast<int>(ordering.perm.size());
  if (l < 0 || 3 * l > n)
    throw std::invalid_argument("chain parameter l must satisfy 0 <= l <= n/3");
  const int prefix = (2 * n + 2) / 3;  // ceil(2n/3)
  ChainFamily fam;
  fam.kind = ChainKind::half_double;
  fam.ordering = ordering;
  fam.l = l;
  for (int i = 0; i <= l; ++i) {
    SubsetWord chain;
    for (int j = 1; j <= 2 * i; ++j) chain.bits |= 1ULL << (ordering.perm[j - 1] - 1);
    for (int t = i + 1; t <= l; ++t) chain.bits |= 1ULL << (ordering.perm[prefix + t - 1] - 1);
    fam.chains.push_back(chain);
  }
  return fam;
}

ChainFamily chain_family_pq(const Ordering& ordering, int p, int q, int k) {
  const int n = static_cast<int>(ordering.perm.size());
  if (p < 1 || p >= q || std::gcd(p, q) != 1)
    throw std::invalid_argument("chain family needs coprime p < q");
  if (n % (p + q) != 0)
    throw std::invalid_argument("chain family needs (p+q) | n");
  if (k < 0 || k > q - p - 1) throw std::invalid_argument("class index k must lie in [0, q-p-1]");
  const int m = n / (p + q);
  const int span = q - p;
  int k_prime = ((k - p * m) % span + span) % span;

  ChainFamily fam;
  fam.kind = ChainKind::ratio_pq;
  fam.ordering = ordering;
  fam.p = p;
  fam.q = q;
  fam.k = k;
  fam.k_prime = k_prime;
  fam.m = m;
  const int top = k_prime == 0 ? m : m - 1;
  for (int i = 0; i <= top; ++i) {
    SubsetWord chain;
    for (int j = 1; j <= q * i + k_prime; ++j) chain.bits |= 1ULL << (ordering.perm[j - 1] - 1);
    for (int j = p * i + 1; j <= p * m; ++j)
      chain.bits |= 1ULL << (ordering.perm[q * m + j - 1] - 1);
    fam.chains.push_back(chain);
  }
  return fam;
}

MembershipEstimate estimate_membership(int n, int l, SubsetWord b, std::uint64_t trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  int size = card(b);
  if (size < l || size > 2 * l)
    throw std::invalid_argument("membership probability is zero outside l <= |B| <= 2l");
  MembershipEstimate est;
  est.trials = trials;
  est.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ChainFamily fam = chain_family_12(random_ordering(n, trial_seed(seed, t)), l);
    for (SubsetWord c : fam.chains) {
      if (c == b) {
        ++est.hits;
        break;
      }
    }
  }
  est.probability = static_cast<double>(est.hits) / static_cast<double>(trials);
  est.std_error =
      std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(trials));
  return est;
}

HitsEstimate expected_hits(const SetFamily& family, int l, std::uint64_t trials,
                           std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  HitsEstimate est;
  est.trials = trials;
  est.seed = seed;
  double sum = 0, sum_sq = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ChainFamily fam = chain_family_12(random_ordering(family.n(), trial_seed(seed, t)), l);
    int hits = 0;
    for (SubsetWord c : fam.chains)
      if (family.contains(c)) ++hits;
    sum += hits;
    sum_sq += static_cast<double>(hits) * hits;
  }
  const double trials_d = static_cast<double>(trials);
  est.mean = sum / trials_d;
  double variance = trials <= 1 ? 0.0 : (sum_sq - sum * sum / trials_d) / (trials_d - 1.0);
  est.std_error = std::sqrt(std::max(0.0, variance) / trials_d);
  return est;
}

}  // namespace tiltcube
