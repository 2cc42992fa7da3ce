#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "blockdeg/block_census.hpp"

using namespace blockdeg;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

std::vector<std::string> names(const std::vector<Partition>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

bool contains_all(const std::vector<BigInt>& have, std::initializer_list<int> want) {
  return std::all_of(want.begin(), want.end(),
                     [&](int w) { return std::find(have.begin(), have.end(), BigInt(w)) != have.end(); });
}

// All p-cores of size m.
std::vector<Partition> cores_of_size(int m, int p) {
  std::vector<Partition> out;
  for_each_partition(m, [&](const Partition& g) {
    if (p_core(g, p) == g) out.push_back(g);
  });
  return out;
}

}  // namespace

TEST(BlockCensus, BlockOf) {
  EXPECT_EQ(block_of(P({7}), 5, GroupKind::Sym).core, P({2}));
  EXPECT_EQ(block_of(P({4}), 7, GroupKind::Sym).core, P({4}));
  EXPECT_EQ(block_of(P({2, 1, 1, 1, 1, 1}), 5, GroupKind::Alt).core, P({1, 1}));
  EXPECT_THROW(block_of(P({4}), 4, GroupKind::Sym), std::invalid_argument);
}

TEST(BlockCensus, PrincipalBlockOfA7AtFive) {
  const CensusRecord rec = census(7, 5, principal_core(7, 5), GroupKind::Alt);
  EXPECT_TRUE(contains_all(rec.ext_degrees, {1, 6, 14}));
}

TEST(BlockCensus, MatchesBruteForce) {
  for (int p : {5, 7})
    for (int n = 0; n <= 15; ++n)
      for (int m = n % p; m <= n; m += p)
        for (const Partition& gamma : cores_of_size(m, p))
          for (GroupKind g : {GroupKind::Sym, GroupKind::Alt}) {
            std::vector<Partition> want;
            std::set<BigInt> want_ext;
            for_each_partition(n, [&](const Partition& l) {
              const BigInt d = degree(l);
              if (d % p == 0) return;
              const Partition c = p_core(l, p);
              if (c != gamma && !(g == GroupKind::Alt && c == conjugate(gamma))) return;
              want.push_back(l);
              if (conjugate(l) != l) want_ext.insert(d);
            });
            const CensusRecord rec = census(n, p, gamma, g);
            EXPECT_EQ(names(rec.pprime_partitions), names(want)) << n << " " << p << " " << gamma.str();
            EXPECT_EQ(rec.ext_degrees, std::vector<BigInt>(want_ext.begin(), want_ext.end()));
            if (m >= p) {
              EXPECT_TRUE(rec.pprime_partitions.empty());
            }
          }
}

TEST(BlockCensus, SmallCoreBlocksHavePPrimeCharacters) {
  for (int p : {5, 7, 11, 13})
    for (int n = p; n <= 24; ++n)
      for (const Partition& gamma : partitions_of(n % p))
        EXPECT_FALSE(census(n, p, gamma, GroupKind::Sym).pprime_partitions.empty()) << n << " " << p;
}

TEST(BlockCensus, RejectsBadCores) {
  EXPECT_THROW(census(7, 5, P({1}), GroupKind::Sym), std::invalid_argument);
  EXPECT_THROW(census(7, 5, P({7}), GroupKind::Sym), std::invalid_argument);
  EXPECT_THROW(census(7, 4, P({3}), GroupKind::Sym), std::invalid_argument);
}

TEST(BlockCensus, OmegaSets) {
  const OmegaReport a = omega_sets(7, 5, P({2}));
  // Listed by increasing arm a.
  EXPECT_EQ(names(a.H), (std::vector<std::string>{"2,1,1,1,1,1", "7"}));
  EXPECT_EQ(names(a.Omega), (std::vector<std::string>{"7"}));
  EXPECT_EQ(a.bound, 1);
  const OmegaReport b = omega_sets(12, 5, P({2}));
  EXPECT_EQ(names(b.Omega), (std::vector<std::string>{"7,1,1,1,1,1", "12"}));
  EXPECT_EQ(b.omega_degrees, (std::vector<BigInt>{462, 1}));
  EXPECT_EQ(b.bound, 1);
  EXPECT_EQ(names(omega_sets(3, 5, P({2, 1})).H), (std::vector<std::string>{"2,1"}));
  EXPECT_EQ(names(omega_sets(4, 5, P({2, 2})).H), (std::vector<std::string>{"2,2"}));
}

TEST(BlockCensus, OmegaBoundFormula) {
  // 37 = 2 + 2*5 + 1*25: floor((1+1)/2) * (2+1).
  EXPECT_EQ(omega_bound(37, 5), 3);
  EXPECT_EQ(omega_bound(12, 5), 1);
  EXPECT_EQ(omega_bound(4, 5), 2);
  EXPECT_EQ(omega_bound(0, 5), 0);
}

TEST(BlockCensus, StarComparisons) {
  const StarComparison a = verify_lemma_alt1(5, P({1}), 2, 2);
  EXPECT_EQ(a.lambda, P({11}));
  EXPECT_EQ(a.mu, P({6, 1, 1, 1, 1, 1}));
  EXPECT_EQ(a.degree_lambda, 1);
  EXPECT_EQ(a.degree_mu, 252);
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(verify_lemma_alt1(5, P({2}), 2, 2).holds);
  EXPECT_TRUE(verify_lemma_alt1(7, Partition{}, 3, 3).holds);
  EXPECT_THROW(verify_lemma_alt1(5, P({1}), 2, 1), std::invalid_argument);
  EXPECT_THROW(verify_lemma_alt1(5, P({5}), 2, 2), std::invalid_argument);
}

TEST(BlockCensus, OmegaBoundExamples) {
  const OmegaBoundVerdict a = verify_omega_bound(7, 5, P({2}));
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.report.Omega.size(), 1U);
  EXPECT_TRUE(verify_omega_bound(12, 5, P({1, 1})).holds);
  const OmegaBoundVerdict c = verify_omega_bound(12, 5, P({2}));
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.distinct_degrees, 2U);
}

TEST(BlockCensus, PrincipalAlternatingBlock) {
  const PrincipalAltVerdict a = verify_prop_alt(7, 5);
  EXPECT_TRUE(a.holds);
  ASSERT_TRUE(a.witness_degree_lambda && a.witness_degree_mu);
  EXPECT_EQ(*a.witness_degree_lambda, 6);
  EXPECT_EQ(*a.witness_degree_mu, 14);
  EXPECT_TRUE(verify_prop_alt(25, 5).holds);
  EXPECT_FALSE(verify_prop_alt(25, 5).witness_lambda.has_value());
  EXPECT_TRUE(verify_prop_alt(11, 11).holds);
  EXPECT_THROW(verify_prop_alt(6, 5), std::invalid_argument);
  EXPECT_THROW(verify_prop_alt(9, 11), std::invalid_argument);
}
