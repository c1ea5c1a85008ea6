#include <gtest/gtest.h>

#include "hyperfvs/cycles.hpp"
#include "hyperfvs/fes.hpp"
#include "hyperfvs/gen.hpp"
#include "hyperfvs/oracle.hpp"
#include "test_support.hpp"

using namespace hyperfvs;

TEST(SplitMix64, ReferenceOutput) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
}

TEST(SplitMix64, BelowStaysInRange) {
  SplitMix64 rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    auto x = rng.below(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int c : hits) EXPECT_GT(c, 800);
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(LooseCycle, Examples) {
  Hypergraph tri = loose_cycle(3);
  EXPECT_EQ(tri.num_vertices(), 6u);
  EXPECT_EQ(canonical_form(tri), canonical_form(brute::loose_triangle()));
  Hypergraph five = loose_cycle(5);
  EXPECT_EQ(five.num_vertices(), 10u);
  EXPECT_EQ(shortest_cycle(five)->length(), 5u);
  for (std::size_t k = 3; k <= 12; ++k) EXPECT_TRUE(is_linear(loose_cycle(k)));
  EXPECT_THROW(loose_cycle(2), std::invalid_argument);
}

TEST(TwoCycleUnion, Examples) {
  EXPECT_EQ(two_cycle_union(1), brute::two_cycle());
  EXPECT_EQ(exact_fvs(two_cycle_union(2)).size, 2u);
  EXPECT_TRUE(check_half_equality(two_cycle_union(3)));
  EXPECT_THROW(two_cycle_union(0), std::invalid_argument);
}

TEST(RandomHypertree, Examples) {
  Hypergraph single = random_hypertree(0, 1);
  EXPECT_EQ(single.num_vertices(), 1u);
  EXPECT_EQ(single.num_edges(), 0u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Hypergraph h = random_hypertree(2, seed);
    EXPECT_EQ(h.num_vertices(), 5u);
    EXPECT_TRUE(is_hypertree(h));
  }
  auto cert = greedy_hyperforest(random_hypertree(10, 4));
  EXPECT_EQ(cert.bound(), 0);
  EXPECT_TRUE(cert.A.empty());
}

TEST(RandomLinear, Examples) {
  EXPECT_EQ(random_linear(5, 0, 1).num_edges(), 0u);
  EXPECT_THROW(random_linear(7, 8, 1), std::invalid_argument);
  // some seed produces the Fano plane
  const Hypergraph target = canonical_form(fano());
  bool seen = false;
  for (std::uint64_t seed = 0; seed < 2000 && !seen; ++seed) {
    try {
      seen = canonical_form(random_linear(7, 7, seed)) == target;
    } catch (const RejectionBudgetExhausted&) {
    }
  }
  EXPECT_TRUE(seen);
}

TEST(RandomUniform, Examples) {
  Hypergraph all = random_3uniform(4, 4, 5);
  EXPECT_EQ(all, brute::make(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(exact_fvs(all).size, brute::tau(all));
  EXPECT_EQ(brute::tau(all), 1u);
  EXPECT_TRUE(is_acyclic(random_3uniform(6, 0, 2)));
  EXPECT_THROW(random_3uniform(4, 5, 1), std::invalid_argument);
  // large n takes the rejection path
  EXPECT_EQ(random_3uniform(200, 50, 8).num_edges(), 50u);
}

TEST(Fano, Structure) {
  Hypergraph f = fano();
  EXPECT_EQ(f.num_vertices(), 7u);
  EXPECT_EQ(f.num_edges(), 7u);
  EXPECT_TRUE(brute::linear(f));
  for (VertexId v = 1; v <= 7; ++v) EXPECT_EQ(f.degree(v), 3u);
  // every pair of points lies on exactly one line
  for (VertexId a = 1; a <= 7; ++a) {
    for (VertexId b = a + 1; b <= 7; ++b) {
      int lines = 0;
      for (const Edge& e : f.edges()) lines += e.contains(a) && e.contains(b);
      EXPECT_EQ(lines, 1);
    }
  }
  EXPECT_EQ(brute::tau(f), 2u);
}

TEST(Property, Deterministic) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    EXPECT_EQ(serialize(random_linear(12, 8, seed)), serialize(random_linear(12, 8, seed)));
    EXPECT_EQ(serialize(random_3uniform(9, 8, seed)), serialize(random_3uniform(9, 8, seed)));
    EXPECT_EQ(serialize(random_hypertree(9, seed)), serialize(random_hypertree(9, seed)));
  }
  EXPECT_NE(serialize(random_linear(12, 8, 1)), serialize(random_linear(12, 8, 2)));
}

TEST(Property, FamilyContracts) {
  SplitMix64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = rng.below(21);
    Hypergraph t = random_hypertree(m, rng.next());
    EXPECT_EQ(t.num_vertices(), 2 * m + 1);
    EXPECT_TRUE(is_hypertree(t));

    Hypergraph l = random_linear(16, 1 + rng.below(12), rng.next());
    EXPECT_TRUE(brute::linear(l));

    Hypergraph u = random_3uniform(8, rng.below(30), rng.next());
    EXPECT_EQ(u.num_vertices(), 8u);
  }
}
