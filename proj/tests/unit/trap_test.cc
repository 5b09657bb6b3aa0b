#include <gtest/gtest.h>

#include <algorithm>

#include "vboe/adversary/servers.h"
#include "vboe/mbqc/enumerate.h"
#include "vboe/stats/estimators.h"
#include "vboe/trap/test_round.h"

namespace vboe::trap {
namespace {

using mbqc::Graph;

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v : g.vertices()) d = std::max(d, g.degree(v));
  return d;
}

// Every plan of every colour class, each visited once.
template <typename Visit>
void for_each_plan(const Graph& graph, const Coloring& coloring, Visit visit) {
  for (std::size_t c = 0; c < coloring.size(); ++c) {
    TestRoundPlan base;
    base.color = c;
    base.traps = coloring.classes[c];
    std::vector<Vertex> dummies;
    for (Vertex v : graph.vertices()) {
      if (!base.is_trap(v)) dummies.push_back(v);
    }
    const std::size_t t = base.traps.size();
    // Per trap: 3 bits of theta and 1 bit of r.
    for (std::size_t code = 0; code < (std::size_t{1} << (4 * t + dummies.size())); ++code) {
      TestRoundPlan plan = base;
      std::size_t bits = code;
      for (Vertex v : plan.traps) {
        plan.trap_theta[v] = Angle(static_cast<int>(bits & 7u));
        plan.trap_r[v] = static_cast<Bit>((bits >> 3) & 1u);
        bits >>= 4;
      }
      for (Vertex v : dummies) {
        plan.dummy_bits[v] = bits & 1u;
        bits >>= 1;
      }
      visit(plan);
    }
  }
}

TEST(ColoringTest, Examples) {
  EXPECT_EQ(greedy_coloring(mbqc::path_pattern(3, {0, 0, 0}).graph()).size(), 2u);
  EXPECT_EQ(greedy_coloring(Graph({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}})).size(), 3u);
  EXPECT_EQ(greedy_coloring(Graph({7}, {})).size(), 1u);

  const Graph p3({1, 2, 3}, {{1, 2}, {2, 3}});
  const auto c = greedy_coloring(p3);
  // Vertex 2 has the highest degree and takes colour 0.
  EXPECT_EQ(c.classes, (std::vector<std::vector<Vertex>>{{2}, {1, 3}}));
}

TEST(ColoringTest, ProperOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : mbqc::all_graphs(n)) {
      const auto c = greedy_coloring(g);
      EXPECT_TRUE(c.is_proper(g));
      EXPECT_LE(c.size(), max_degree(g) + 1);
    }
  }
}

TEST(ColoringTest, IsProperRejects) {
  const Graph p3({1, 2, 3}, {{1, 2}, {2, 3}});
  EXPECT_FALSE((Coloring{{{1, 2}, {3}}}.is_proper(p3)));
  EXPECT_FALSE((Coloring{{{1}, {3}}}.is_proper(p3)));
  EXPECT_FALSE((Coloring{{{1, 3}, {2}, {2}}}.is_proper(p3)));
}

TEST(BuildTestRoundTest, EdgelessGraphIsAllTraps) {
  const Graph g({0, 1, 2}, {});
  Rng rng(1);
  const auto plan = build_test_round(g, greedy_coloring(g), rng);
  EXPECT_EQ(plan.traps, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(plan.dummy_bits.empty());
}

TEST(BuildTestRoundTest, PathStructure) {
  const Graph p3({1, 2, 3}, {{1, 2}, {2, 3}});
  const Coloring c{{{1, 3}, {2}}};
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto plan = build_test_round(p3, c, rng);
    if (plan.color == 0) {
      EXPECT_EQ(plan.traps, (std::vector<Vertex>{1, 3}));
      EXPECT_EQ(plan.dummy_bits.size(), 1u);
      EXPECT_TRUE(plan.dummy_bits.contains(2));
    } else {
      EXPECT_EQ(plan.traps, (std::vector<Vertex>{2}));
      EXPECT_TRUE(plan.dummy_bits.contains(1) && plan.dummy_bits.contains(3));
    }
    EXPECT_EQ(plan.trap_theta.size(), plan.traps.size());
    EXPECT_EQ(plan.trap_r.size(), plan.traps.size());
  }
}

TEST(BuildTestRoundTest, ClassChoiceIsUniform) {
  const Graph triangle({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
  const auto c = greedy_coloring(triangle);
  Rng rng(3);
  std::vector<std::size_t> counts(c.size(), 0);
  for (int i = 0; i < 100000; ++i) ++counts[build_test_round(triangle, c, rng).color];
  EXPECT_GT(stats::chi_square_p_value(counts, std::vector<double>(3, 1.0 / 3)), 0.001);
}

TEST(ExpectedTrapBitTest, Examples) {
  const Graph star({0, 1, 2}, {{0, 1}, {0, 2}});
  TestRoundPlan isolated;
  isolated.traps = {5};
  isolated.trap_r[5] = 0;
  isolated.trap_theta[5] = Angle(3);
  EXPECT_EQ(expected_trap_bit(isolated, Graph({5}, {}), 5), 0);

  TestRoundPlan plan;
  plan.traps = {0};
  plan.trap_theta[0] = Angle(0);
  plan.trap_r[0] = 0;
  plan.dummy_bits = {{1, 1}, {2, 0}};
  EXPECT_EQ(expected_trap_bit(plan, star, 0), 1);

  plan.trap_r[0] = 1;
  plan.dummy_bits = {{1, 1}, {2, 1}};
  EXPECT_EQ(expected_trap_bit(plan, star, 0), 1);

  try {
    expected_trap_bit(plan, star, 1);
    FAIL() << "expected NotATrap";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotATrap);
  }
}

TEST(RunTestRoundTest, HonestPassesEveryPlanOnSmallGraphs) {
  std::size_t rounds = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : mbqc::all_graphs(n)) {
      const auto coloring = greedy_coloring(g);
      for_each_plan(g, coloring, [&](const TestRoundPlan& plan) {
        for (std::size_t a = 0; a < plan.traps.size(); ++a) {
          for (std::size_t b = a + 1; b < plan.traps.size(); ++b) {
            ASSERT_FALSE(g.has_edge(plan.traps[a], plan.traps[b]));
          }
        }
        Rng rng(rounds);
        auto server = adversary::honest_server(g, rounds + 1);
        const auto result = run_test_round(plan, g, *server, rng);
        ASSERT_TRUE(result.passed) << "graph on " << n << " vertices, colour " << plan.color;
        ++rounds;
      });
    }
  }
  EXPECT_GT(rounds, 100000u);
}

TEST(RunTestRoundTest, HonestPassesOnLargerGraphs) {
  // 6-cycle with a chord, and a 3x2 grid.
  const std::vector<Graph> graphs = {
      Graph({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}),
      Graph({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}})};
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto coloring = greedy_coloring(graphs[gi]);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < 10000; ++i) {
      Rng rng(derive_seed(4, {gi, i}));
      const auto plan = build_test_round(graphs[gi], coloring, rng);
      auto server = adversary::honest_server(graphs[gi], derive_seed(5, {gi, i}));
      failures += run_test_round(plan, graphs[gi], *server, rng).passed ? 0 : 1;
    }
    EXPECT_EQ(failures, 0u);
  }
}

TEST(RunTestRoundTest, ZBeforeMeasurementIsDetected) {
  const Graph p3({0, 1, 2}, {{0, 1}, {1, 2}});
  const auto coloring = greedy_coloring(p3);
  for (Vertex target : p3.vertices()) {
    std::size_t failures = 0;
    const std::size_t n = 10000;
    for (std::size_t i = 0; i < n; ++i) {
      Rng rng(derive_seed(6, {static_cast<std::uint64_t>(target), i}));
      const auto plan = build_test_round(p3, coloring, rng);
      auto server = adversary::pauli_attack_server(p3, {{target, quantum::Pauli::Z}}, rng.next());
      failures += run_test_round(plan, p3, *server, rng).passed ? 0 : 1;
    }
    EXPECT_GE(static_cast<double>(failures) / n, 1.0 / coloring.size() - 0.02) << "vertex " << target;
  }
}

TEST(RunTestRoundTest, RandomAnswersPassEachTrapHalfTheTime) {
  const Graph g({0, 1}, {{0, 1}});
  const auto coloring = greedy_coloring(g);
  std::size_t traps = 0;
  std::size_t failed = 0;
  Rng rng(7);
  for (int i = 0; i < 20000; ++i) {
    const auto plan = build_test_round(g, coloring, rng);
    auto server = adversary::answer_strategy_server(g, adversary::AnswerStrategy::RandomAnswers, rng.next());
    const auto result = run_test_round(plan, g, *server, rng);
    traps += plan.traps.size();
    failed += result.failed_traps;
  }
  EXPECT_NEAR(static_cast<double>(failed) / static_cast<double>(traps), 0.5, 0.015);
}

TEST(RunTestRoundTest, FlipAnswersFailsAllTrapRounds) {
  const Graph g({0, 1, 2}, {});
  const auto coloring = greedy_coloring(g);
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto plan = build_test_round(g, coloring, rng);
    auto server = adversary::answer_strategy_server(g, adversary::AnswerStrategy::FlipAnswers, rng.next());
    const auto result = run_test_round(plan, g, *server, rng);
    EXPECT_FALSE(result.passed);
    EXPECT_EQ(result.failed_traps, 3u);
  }
}

TEST(RunTestRoundTest, TranscriptRecordsPlan) {
  const Graph p3({0, 1, 2}, {{0, 1}, {1, 2}});
  Rng rng(9);
  const auto plan = build_test_round(p3, greedy_coloring(p3), rng);
  auto server = adversary::honest_server(p3, 10);
  const auto result = run_test_round(plan, p3, *server, rng, {2, 0, 1});
  const auto& t = result.transcript;
  EXPECT_EQ(t.kind, ubqc::RoundKind::Test);
  EXPECT_EQ(t.order, (std::vector<Vertex>{2, 0, 1}));
  EXPECT_EQ(*t.plan, plan);
  for (Vertex v : plan.traps) {
    EXPECT_EQ(t.sent.at(v), quantum::QubitPreparation::plus(plan.trap_theta.at(v)));
    EXPECT_EQ(t.delta.at(v), plan.trap_theta.at(v) + Angle::pi_times(plan.trap_r.at(v)));
  }
  for (const auto& [v, d] : plan.dummy_bits) EXPECT_EQ(t.sent.at(v), quantum::QubitPreparation::computational(d));
}

TEST(RvbqcAcceptTest, Examples) {
  const std::vector<mbqc::OutputBits> same(5, mbqc::OutputBits{1});
  const auto ok = rvbqc_accept(0, 2, same);
  EXPECT_TRUE(ok.accepted);
  EXPECT_EQ(ok.value, mbqc::OutputBits{1});

  EXPECT_FALSE(rvbqc_accept(2, 2, same).accepted);

  const std::vector<mbqc::OutputBits> split = {{0}, {1}, {0}, {1}};
  EXPECT_FALSE(rvbqc_accept(0, 2, split).accepted);

  const std::vector<mbqc::OutputBits> majority = {{0}, {1}, {1}};
  EXPECT_EQ(rvbqc_accept(1, 2, majority).value, mbqc::OutputBits{1});
}

}  // namespace
}  // namespace vboe::trap
