#include <gtest/gtest.h>

#include "hyperfvs/fvs.hpp"
#include "hyperfvs/gen.hpp"
#include "test_support.hpp"

using namespace hyperfvs;

namespace {

RuleApplication first_step(const Hypergraph& h, FvsMode mode = FvsMode::Linear) {
  auto app = step(h, mode);
  EXPECT_TRUE(app.has_value());
  return app.value_or(RuleApplication{});
}

void expect_sound(const Hypergraph& h, const FvsCertificate& cert) {
  EXPECT_TRUE(verify_fvs(h, cert.S)) << serialize(h);
  EXPECT_TRUE(brute::vertices_on_cycles(delete_vertices(h, cert.S)) ==
              std::vector<bool>(h.num_vertices(), false))
      << serialize(h);
  EXPECT_EQ(audit_fvs_certificate(h, cert), "") << serialize(h);
  EXPECT_LE(static_cast<std::int64_t>(cert.S.size()), cert.bound.floor());
}

}  // namespace

TEST(RuleNames, RoundTrip) {
  for (int r = 0; r <= static_cast<int>(Rule::GeneralDegree2Plus); ++r) {
    auto rule = static_cast<Rule>(r);
    EXPECT_EQ(rule_from_name(rule_name(rule)), rule);
  }
  EXPECT_FALSE(rule_from_name("Nope"));
}

TEST(Bound, Arithmetic) {
  EXPECT_EQ(fvs_bound(FvsMode::Linear, 7), (Rational{7, 3}));
  EXPECT_EQ(fvs_bound(FvsMode::Linear, 7).floor(), 2);
  EXPECT_EQ(fvs_bound(FvsMode::General, 7).floor(), 3);
  EXPECT_EQ(fvs_bound(FvsMode::General, 0).floor(), 0);
  EXPECT_EQ(fvs_bound(FvsMode::Linear, 7).str(), "7/3");
}

TEST(Step, AcyclicGivesNothing) {
  EXPECT_FALSE(step(random_hypertree(5, 1), FvsMode::Linear));
  EXPECT_FALSE(step(Hypergraph(3, {}), FvsMode::General));
}

TEST(Step, NonCycleEdgeFirst) {
  Hypergraph h = brute::make(9, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}, {2, 8, 9}});
  auto app = first_step(h);
  EXPECT_EQ(app.rule, Rule::NonCycleEdge);
  EXPECT_EQ(app.removed_edges, std::vector<EdgeId>{static_cast<EdgeId>(h.find(Edge::make(2, 8, 9)))});
  EXPECT_TRUE(app.added_vertices.empty());
}

TEST(Step, HighDegreeVertex) {
  // two loose triangles glued at vertex 1
  Hypergraph h = brute::make(11, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}, {1, 7, 8}, {8, 9, 10}, {10, 11, 1}});
  auto app = first_step(h);
  EXPECT_EQ(app.rule, Rule::HighDegreeVertex);
  EXPECT_EQ(app.added_vertices, std::vector<VertexId>{1});
  EXPECT_EQ(app.removed_edges.size(), 4u);
}

TEST(Step, Triangle) {
  auto app = first_step(brute::loose_triangle());
  EXPECT_EQ(app.rule, Rule::Triangle);
  EXPECT_EQ(app.removed_edges, (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_EQ(app.added_vertices.size(), 1u);
  EXPECT_EQ(first_step(brute::k4_dual()).rule, Rule::Triangle);
}

TEST(Step, PendantOnCycle) {
  auto app = first_step(loose_cycle(5));
  EXPECT_EQ(app.rule, Rule::PendantOnCycle);
  EXPECT_EQ(app.removed_edges.size(), 3u);
  EXPECT_EQ(app.added_vertices.size(), 1u);
}

TEST(Step, FourCycleShared) {
  auto app = first_step(brute::k33_dual());
  EXPECT_EQ(app.rule, Rule::FourCycleShared);
  EXPECT_EQ(app.removed_edges.size(), 6u);
  EXPECT_EQ(app.added_vertices.size(), 2u);
}

TEST(Step, FourCycleDisjoint) {
  auto app = first_step(brute::cube_dual());
  EXPECT_EQ(app.rule, Rule::FourCycleDisjoint);
  EXPECT_EQ(app.removed_edges.size(), 6u);
  EXPECT_EQ(app.added_vertices.size(), 2u);
}

TEST(Step, CycleMod0) {
  // girth 6, so t = 2
  auto app = first_step(brute::heawood_dual());
  EXPECT_EQ(app.rule, Rule::CycleMod0);
  EXPECT_EQ(app.removed_edges.size(), 6u);
  EXPECT_EQ(app.added_vertices.size(), 2u);
}

TEST(Step, CycleMod1) {
  // girth 7: cycle plus two second edges, t + 1 = 3 vertices
  auto app = first_step(brute::mcgee_dual());
  EXPECT_EQ(app.rule, Rule::CycleMod1);
  EXPECT_EQ(app.removed_edges.size(), 9u);
  EXPECT_EQ(app.added_vertices.size(), 3u);
}

TEST(Step, CycleMod2) {
  // girth 5, every u_i of degree 2
  auto app = first_step(brute::petersen_dual());
  EXPECT_EQ(app.rule, Rule::CycleMod2);
  EXPECT_EQ(app.removed_edges.size(), 6u);
  EXPECT_EQ(app.added_vertices.size(), 2u);
}

TEST(Step, GeneralPicksCycleVertex) {
  auto app = first_step(brute::two_cycle(), FvsMode::General);
  EXPECT_EQ(app.rule, Rule::GeneralDegree2Plus);
  EXPECT_EQ(app.added_vertices, std::vector<VertexId>{1});
  EXPECT_EQ(app.removed_edges, (std::vector<EdgeId>{0, 1}));
}

TEST(Step, LinearRefusesNonLinear) { EXPECT_THROW(step(brute::two_cycle(), FvsMode::Linear), PreconditionError); }

TEST(LinearFvs, Examples) {
  auto tri = linear_fvs(brute::loose_triangle());
  EXPECT_EQ(tri.S.size(), 1u);
  expect_sound(brute::loose_triangle(), tri);

  Hypergraph tree = random_hypertree(8, 4);
  auto empty = linear_fvs(tree);
  EXPECT_TRUE(empty.S.empty());
  EXPECT_TRUE(empty.trace.empty());
  expect_sound(tree, empty);

  auto f = linear_fvs(fano());
  EXPECT_EQ(f.S, (std::vector<VertexId>{1, 4}));
  EXPECT_EQ(f.m0, 7u);
  expect_sound(fano(), f);
  EXPECT_EQ(brute::tau(fano()), 2u);

  EXPECT_THROW(linear_fvs(brute::two_cycle()), PreconditionError);
}

TEST(LinearFvs, AllRuleWitnessesCertify) {
  for (const Hypergraph& h : {brute::k33_dual(), brute::cube_dual(), brute::heawood_dual(), brute::mcgee_dual(),
                              brute::petersen_dual(), brute::k4_dual()}) {
    auto cert = linear_fvs(h);
    expect_sound(h, cert);
  }
}

TEST(GeneralFvs, Examples) {
  auto two = general_fvs(brute::two_cycle());
  EXPECT_EQ(two.S.size(), 1u);
  EXPECT_TRUE(two.S[0] == 1 || two.S[0] == 2);
  expect_sound(brute::two_cycle(), two);

  EXPECT_TRUE(general_fvs(brute::make(3, {{1, 2, 3}})).S.empty());

  auto f = general_fvs(fano());
  EXPECT_LE(f.S.size(), 3u);
  expect_sound(fano(), f);
}

TEST(VerifyFvs, Examples) {
  std::vector<VertexId> one{1}, none;
  EXPECT_TRUE(verify_fvs(brute::two_cycle(), one));
  EXPECT_FALSE(verify_fvs(brute::two_cycle(), none));
  for (VertexId v = 1; v <= 7; ++v) {
    std::vector<VertexId> s{v};
    EXPECT_FALSE(verify_fvs(fano(), s));
  }
  std::vector<VertexId> bad{9};
  EXPECT_THROW(verify_fvs(fano(), bad), std::out_of_range);
}

TEST(Audit, DetectsTampering) {
  Hypergraph h = fano();
  const auto good = linear_fvs(h);
  ASSERT_EQ(audit_fvs_certificate(h, good), "");

  auto dropped = good;
  dropped.S.pop_back();
  EXPECT_NE(audit_fvs_certificate(h, dropped), "");

  auto wrong_m = good;
  wrong_m.m0 = 6;
  EXPECT_NE(audit_fvs_certificate(h, wrong_m), "");

  auto wrong_bound = good;
  wrong_bound.bound = Rational{7, 2};
  EXPECT_NE(audit_fvs_certificate(h, wrong_bound), "");

  auto cheap = good;
  cheap.trace[1].removed_edges.pop_back();
  EXPECT_NE(audit_fvs_certificate(h, cheap), "");

  auto twice = good;
  twice.trace[1].removed_edges[0] = twice.trace[0].removed_edges[0];
  EXPECT_NE(audit_fvs_certificate(h, twice), "");

  auto foreign_rule = good;
  foreign_rule.trace[0].rule = Rule::GeneralDegree2Plus;
  EXPECT_NE(audit_fvs_certificate(h, foreign_rule), "");

  auto bad_id = good;
  bad_id.S.back() = 99;
  EXPECT_NE(audit_fvs_certificate(h, bad_id), "");
}

namespace {

void check_instance(const Hypergraph& h, bool with_oracle) {
  const std::size_t m = h.num_edges();
  const std::size_t exact = with_oracle ? brute::tau(h) : 0;
  if (is_linear(h)) {
    auto cert = linear_fvs(h);
    expect_sound(h, cert);
    EXPECT_LE(cert.S.size(), m / 3) << serialize(h);
    EXPECT_LE(cert.trace.size(), m);
    for (const auto& app : cert.trace) {
      EXPECT_GE(app.removed_edges.size(), 3 * app.added_vertices.size());
      EXPECT_FALSE(app.removed_edges.empty());
    }
    EXPECT_LE(exact, cert.S.size());
  }
  auto cert = general_fvs(h);
  expect_sound(h, cert);
  EXPECT_LE(cert.S.size(), m / 2) << serialize(h);
  for (const auto& app : cert.trace) EXPECT_GE(app.removed_edges.size(), 2 * app.added_vertices.size());
  EXPECT_LE(exact, cert.S.size());
}

}  // namespace

TEST(Property, RandomLinear) {
  SplitMix64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 7 + rng.below(14);
    const std::size_t m = 1 + rng.below(std::min<std::size_t>(12, n * (n - 1) / 6));
    Hypergraph h;
    try {
      h = random_linear(n, m, rng.next());
    } catch (const RejectionBudgetExhausted&) {
      continue;
    }
    check_instance(h, n <= 12);
  }
}

TEST(Property, RandomUniform) {
  SplitMix64 rng(78);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 4 + rng.below(7);
    const std::size_t m = rng.below(std::min<std::size_t>(9, n * (n - 1) * (n - 2) / 6) + 1);
    check_instance(random_3uniform(n, m, rng.next()), true);
  }
}

TEST(Property, LooseCycles) {
  for (std::size_t k = 3; k <= 12; ++k) {
    auto cert = linear_fvs(loose_cycle(k));
    expect_sound(loose_cycle(k), cert);
    EXPECT_EQ(cert.S.size(), 1u);
  }
}

TEST(Property, Deterministic) {
  Hypergraph h = random_linear(18, 12, 3);
  auto a = linear_fvs(h);
  auto b = linear_fvs(h);
  EXPECT_EQ(a.S, b.S);
  EXPECT_EQ(a.trace, b.trace);
}
