#include <gtest/gtest.h>

#include <stdexcept>

#include "blockdeg/verify.hpp"

using namespace blockdeg;

namespace {

std::string stable(const VerificationReport& r) { return to_json(r, false).dump(); }

}  // namespace

TEST(Parallel, OrderedMapKeepsOrder) {
  std::vector<int> items(500);
  for (int i = 0; i < 500; ++i) items[static_cast<std::size_t>(i)] = i;
  const auto out = ordered_map(items, [](int x) { return x * x; }, 7);
  ASSERT_EQ(out.size(), items.size());
  for (int i = 0; i < 500; ++i) EXPECT_EQ(out[static_cast<std::size_t>(i)], i * i);
  EXPECT_TRUE(ordered_map(std::vector<int>{}, [](int x) { return x; }, 4).empty());
}

TEST(Parallel, LowestFailingIndexWins) {
  std::vector<int> items(100);
  for (int i = 0; i < 100; ++i) items[static_cast<std::size_t>(i)] = i;
  auto fn = [](int x) {
    if (x % 17 == 5) throw std::runtime_error("item " + std::to_string(x));
    return x;
  };
  for (unsigned jobs : {1U, 3U, 8U}) {
    try {
      ordered_map(items, fn, jobs);
      FAIL() << "expected a throw";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "item 5");
    }
  }
}

TEST(Report, JsonLayoutAndCsv) {
  VerificationReport r;
  r.command = "verify demo";
  r.grid = {{"max_n", 3}};
  r.absorb(2, {{"n=1", "kind", "a, \"quoted\" detail"}}, {{"n=2", "half", "x"}});
  r.grid_size = 2;
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "command", "grid", "grid_size", "cells_checked", "violations",
                                            "ambiguous", "wall_time"}));
  EXPECT_EQ(j["schema"], "blockdeg/1");
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(to_json(r, false).contains("wall_time"));
  EXPECT_EQ(to_csv(r), "status,cell,kind,detail\nviolation,n=1,kind,\"a, \"\"quoted\"\" detail\"\nambiguous,n=2,half,x\n");
}

TEST(Verify, ParallelMatchesSerial) {
  const std::vector<int> primes{2, 3, 5};
  EXPECT_EQ(stable(verify_macdonald_grid(14, primes, 1)), stable(verify_macdonald_grid(14, primes, 4)));
  EXPECT_EQ(stable(verify_star_comparison_grid(30, {5, 7}, 1)), stable(verify_star_comparison_grid(30, {5, 7}, 3)));
  EXPECT_EQ(stable(verify_omega_bound_grid(20, {5, 7}, 1)), stable(verify_omega_bound_grid(20, {5, 7}, 4)));
  EXPECT_EQ(stable(verify_principal_alt_grid(14, {5, 7, 11}, 1)), stable(verify_principal_alt_grid(14, {5, 7, 11}, 5)));
  LieGrid g;
  g.n_max = 6;
  g.a_n_max = 6;
  g.q_max = 9;
  g.p_max = 13;
  // The coverage grid has violations here, so this also pins their order.
  EXPECT_EQ(stable(verify_coverage_grid(g, 1)), stable(verify_coverage_grid(g, 4)));
  EXPECT_EQ(stable(verify_tables_grid(g, 1)), stable(verify_tables_grid(g, 2)));
  EXPECT_EQ(stable(verify_d4_grid(32, 19, 1)), stable(verify_d4_grid(32, 19, 6)));
}

TEST(Verify, SmallGridsAreClean) {
  EXPECT_TRUE(verify_macdonald_grid(16, {2, 3, 5, 7}, 2).ok());
  EXPECT_TRUE(verify_star_comparison_grid(30, {5, 7, 11}, 2).ok());
  EXPECT_TRUE(verify_omega_bound_grid(24, {5, 7, 11}, 2).ok());
  EXPECT_TRUE(verify_alt_block_bound_grid(20, {5, 7}, 2).ok());
  EXPECT_TRUE(verify_principal_alt_grid(18, {5, 7, 11, 13, 17}, 2).ok());
  EXPECT_TRUE(verify_cyclotomic_grid(30, 9, 19, 2).ok());
  EXPECT_TRUE(verify_d4_grid(32, 31, 2).ok());
  EXPECT_TRUE(verify_exceptions_grid(32, 31, 2).ok());
  EXPECT_TRUE(verify_typeA_grid(6, {2, 3, 4}, 13, 2).ok());
}

TEST(Verify, LieGridSkipsWhatTheTablesDoNotCover) {
  LieGrid g;
  g.types = {LieType::A, LieType::B};
  g.n_max = 4;
  g.a_n_max = 4;
  g.q_max = 4;
  g.p_max = 7;
  for (const GroupContext& c : lie_grid_cells(g)) {
    EXPECT_TRUE(divides_group_order(c)) << c.str();
    EXPECT_TRUE(simple_group_case(c)) << c.str();
    EXPECT_FALSE(excluded_from_coverage(c)) << c.str();
    EXPECT_NE(c.q % c.p, 0);
  }
}
