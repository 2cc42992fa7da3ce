#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockdeg/numeric.hpp"
#include "blockdeg/partition.hpp"
#include "blockdeg/sym_degrees.hpp"

namespace blockdeg {

enum class GroupKind { Sym, Alt };

inline std::string to_string(GroupKind g) { return g == GroupKind::Sym ? "sn" : "an"; }

/// p-block of S_n or A_n, labelled by a p-core. Alternating-group labels
/// hold the lexicographically smaller of {core, core'}.
struct BlockLabel {
  int p = 2;
  Partition core;
  GroupKind group = GroupKind::Sym;

  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

inline Partition canonical_alt_core(const Partition& core) {
  Partition conj = conjugate(core);
  return std::min(core, conj);
}

inline BlockLabel block_of(const Partition& lambda, int p, GroupKind group) {
  if (!is_prime(p)) throw std::invalid_argument("block_of: p must be prime");
  Partition core = p_core(lambda, p);
  if (group == GroupKind::Alt) core = canonical_alt_core(core);
  return {p, std::move(core), group};
}

/// Core of the trivial character (n); the full iterated p-core.
inline Partition principal_core(int n, int p) {
  return p_core(n == 0 ? Partition{} : Partition{n}, p);
}

struct CensusRecord {
  int n = 0;
  int p = 2;
  BlockLabel label;
  std::vector<Partition> pprime_partitions;
  std::vector<Partition> extendable_partitions;  // the lambda != lambda' subset
  std::vector<BigInt> degrees;                   // sorted, distinct
  std::vector<BigInt> ext_degrees;               // sorted, distinct
};

namespace detail {

inline void check_block_core(int n, int p, const Partition& gamma, const char* who) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be prime");
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be non-negative");
  if (!is_core(gamma, p))
    throw std::invalid_argument(std::string(who) + ": (" + gamma.str() + ") is not a " + std::to_string(p) + "-core");
  const int m = gamma.size();
  if (m > n || (n - m) % p != 0)
    throw std::invalid_argument(std::string(who) + ": |core| must be at most n and congruent to n mod p");
}

inline std::vector<BigInt> sorted_unique(std::vector<BigInt> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// Exhaustive scan of the partitions of n: the p'-degree characters of the
/// block labelled by gamma. For A_n the block collects cores gamma and gamma'.
inline CensusRecord census(int n, int p, const Partition& gamma, GroupKind group = GroupKind::Alt) {
  detail::check_block_core(n, p, gamma, "census");
  CensusRecord rec;
  rec.n = n;
  rec.p = p;
  rec.label = {p, group == GroupKind::Alt ? canonical_alt_core(gamma) : gamma, group};
  const Partition gamma_conj = conjugate(gamma);
  std::vector<BigInt> degrees;
  std::vector<BigInt> ext;
  for_each_partition(n, [&](const Partition& lambda) {
    if (!is_p_prime_macdonald(lambda, p)) return;
    const Partition core = p_core(lambda, p);
    const bool in_block = core == gamma || (group == GroupKind::Alt && core == gamma_conj);
    if (!in_block) return;
    rec.pprime_partitions.push_back(lambda);
    BigInt d = degree(lambda);
    if (conjugate(lambda) != lambda) {
      rec.extendable_partitions.push_back(lambda);
      ext.push_back(d);
    }
    degrees.push_back(std::move(d));
  });
  rec.degrees = detail::sorted_unique(std::move(degrees));
  rec.ext_degrees = detail::sorted_unique(std::move(ext));
  return rec;
}

/// floor((a_k + 1) / 2) * prod_{i=1}^{k-1} (a_i + 1) over the base-p digits of n.
inline std::int64_t omega_bound(int n, int p) {
  const PAdicDigits d = p_adic_digits(n, p);
  const int k = d.top_index();
  if (k < 0) return 0;
  std::int64_t bound = (d.digit(k) + 1) / 2;
  for (int i = 1; i < k; ++i) bound *= d.digit(i) + 1;
  return bound;
}

struct OmegaReport {
  int n = 0;
  int p = 2;
  Partition gamma;
  std::vector<Partition> H;
  std::vector<Partition> Omega;
  std::vector<BigInt> omega_degrees;  // aligned with Omega
  std::int64_t bound = 0;
};

/// The star-shaped p'-characters gamma*(a, n-m-a) of the block of gamma, by
/// increasing a, and the subset with first row longer than first column.
inline OmegaReport omega_sets(int n, int p, const Partition& gamma) {
  detail::check_block_core(n, p, gamma, "omega_sets");
  OmegaReport rep;
  rep.n = n;
  rep.p = p;
  rep.gamma = gamma;
  rep.bound = omega_bound(n, p);
  const int free_cells = n - gamma.size();
  std::set<Partition> seen;
  for (int a = 0; a <= free_cells; ++a) {
    Partition lambda = star(gamma, a, free_cells - a);
    if (!seen.insert(lambda).second) continue;
    if (p_core(lambda, p) != gamma || !is_p_prime_macdonald(lambda, p)) continue;
    rep.H.push_back(lambda);
    if (lambda[0] > conjugate(lambda)[0]) {
      rep.omega_degrees.push_back(degree(lambda));
      rep.Omega.push_back(std::move(lambda));
    }
  }
  return rep;
}

/// Degree comparison between two neighbouring star shapes:
/// lambda = gamma*(ap, (w-a)p) and mu = gamma*((a-1)p, (w-a+1)p).
struct StarComparison {
  Partition lambda;
  Partition mu;
  BigInt degree_lambda;
  BigInt degree_mu;
  bool holds = false;  // degree_lambda < degree_mu
};

inline bool star_comparison_admissible(int w, int a) { return (w + 1) / 2 + 1 <= a && a <= w; }

inline StarComparison verify_lemma_alt1(int p, const Partition& gamma, int w, int a) {
  if (!is_prime(p)) throw std::invalid_argument("verify_lemma_alt1: p must be prime");
  if (gamma.size() >= p) throw std::invalid_argument("verify_lemma_alt1: |gamma| must be below p");
  if (!star_comparison_admissible(w, a))
    throw std::invalid_argument("verify_lemma_alt1: need floor((w+1)/2)+1 <= a <= w");
  StarComparison out;
  out.lambda = star(gamma, a * p, (w - a) * p);
  out.mu = star(gamma, (a - 1) * p, (w - a + 1) * p);
  out.degree_lambda = degree(out.lambda);
  out.degree_mu = degree(out.mu);
  out.holds = out.degree_lambda < out.degree_mu;
  return out;
}

struct OmegaBoundVerdict {
  OmegaReport report;
  std::size_t distinct_degrees = 0;
  bool holds = false;
};

/// |cd(Omega)| = |Omega| >= bound, for gamma a partition of the last p-adic
/// digit of n. Needs n >= p: with a single digit the bound is not meaningful.
inline OmegaBoundVerdict verify_omega_bound(int n, int p, const Partition& gamma) {
  if (n < p) throw std::invalid_argument("verify_omega_bound: needs n >= p");
  if (gamma.size() != n % p) throw std::invalid_argument("verify_omega_bound: gamma must partition n mod p");
  OmegaBoundVerdict v;
  v.report = omega_sets(n, p, gamma);
  v.distinct_degrees = detail::sorted_unique(v.report.omega_degrees).size();
  v.holds = v.distinct_degrees == v.report.Omega.size() &&
            static_cast<std::int64_t>(v.report.Omega.size()) >= v.report.bound;
  return v;
}

/// Lower bound on extendable p'-degrees of the A_n block of gamma, checked
/// against the exhaustive census; Omega must sit inside the census too.
struct AltBlockBoundVerdict {
  CensusRecord census;
  OmegaReport omega;
  bool omega_inside_extendable = false;
  bool holds = false;
};

inline AltBlockBoundVerdict verify_alt_block_bound(int n, int p, const Partition& gamma) {
  if (n < p) throw std::invalid_argument("verify_alt_block_bound: needs n >= p");
  if (gamma.size() != n % p) throw std::invalid_argument("verify_alt_block_bound: gamma must partition n mod p");
  AltBlockBoundVerdict v;
  v.census = census(n, p, gamma, GroupKind::Alt);
  v.omega = omega_sets(n, p, gamma);
  const auto& ext = v.census.extendable_partitions;
  v.omega_inside_extendable = std::all_of(v.omega.Omega.begin(), v.omega.Omega.end(), [&](const Partition& l) {
    return std::find(ext.begin(), ext.end(), l) != ext.end();
  });
  v.holds = v.omega_inside_extendable &&
            static_cast<std::int64_t>(v.census.ext_degrees.size()) >= v.omega.bound;
  return v;
}

struct PrincipalAltVerdict {
  CensusRecord census;
  bool census_ok = false;  // at least three extendable p'-degrees
  // Hook witnesses (a_0, 1^{n-a_0}) and (a_0, 2, 1^{n-a_0-2}), checked when
  // a_0 >= 2 and at most two higher base-p digits of n are nonzero.
  std::optional<Partition> witness_lambda;
  std::optional<Partition> witness_mu;
  std::optional<BigInt> witness_degree_lambda;
  std::optional<BigInt> witness_degree_mu;
  bool witnesses_ok = true;
  bool holds = false;
};

/// At least three extendable p'-degrees in the principal p-block of A_n,
/// n >= 7, p >= 5 with p <= n (so that p divides |A_n|).
inline PrincipalAltVerdict verify_prop_alt(int n, int p) {
  if (n < 7) throw std::invalid_argument("verify_prop_alt: needs n >= 7");
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("verify_prop_alt: needs a prime p >= 5");
  if (p > n) throw std::invalid_argument("verify_prop_alt: needs p <= n");
  PrincipalAltVerdict v;
  v.census = census(n, p, principal_core(n, p), GroupKind::Alt);
  v.census_ok = v.census.ext_degrees.size() >= 3;
  const PAdicDigits digits = p_adic_digits(n, p);
  const int a0 = digits.digit(0);
  const auto higher = std::count_if(digits.digits.begin() + 1, digits.digits.end(), [](int a) { return a != 0; });
  if (a0 >= 2 && higher <= 2) {
    std::vector<int> lam{a0};
    lam.insert(lam.end(), static_cast<std::size_t>(n - a0), 1);
    std::vector<int> mu{a0, 2};
    mu.insert(mu.end(), static_cast<std::size_t>(n - a0 - 2), 1);
    v.witness_lambda = Partition(std::move(lam));
    v.witness_mu = Partition(std::move(mu));
    v.witness_degree_lambda = degree(*v.witness_lambda);
    v.witness_degree_mu = degree(*v.witness_mu);
    const auto& ext = v.census.extendable_partitions;
    auto listed = [&](const Partition& l) { return std::find(ext.begin(), ext.end(), l) != ext.end(); };
    v.witnesses_ok = listed(*v.witness_lambda) && listed(*v.witness_mu) && *v.witness_degree_lambda > 1 &&
                     *v.witness_degree_lambda < *v.witness_degree_mu;
  }
  v.holds = v.census_ok && v.witnesses_ok;
  return v;
}

}  // namespace blockdeg
