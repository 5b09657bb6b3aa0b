#include <gtest/gtest.h>

#include <cmath>

#include "vboe/mbqc/dmbqc.h"
#include "vboe/mbqc/enumerate.h"
#include "vboe/mbqc/pattern.h"
#include "vboe/mbqc/pattern_io.h"

namespace vboe::mbqc {
namespace {

using quantum::StateVector;

// Vertices 1-2-3 as in the usual textbook example.
Graph path123() { return Graph({1, 2, 3}, {{1, 2}, {2, 3}}); }

Flow shift123(std::vector<Vertex> order = {1, 2, 3}) { return Flow{{{1, 2}, {2, 3}}, std::move(order)}; }

// Independent oracle for a path pattern with |+> input: each measured
// vertex applies H Rz(-phi); the output is then read in the |+-_phi> basis.
OutputDistribution path_circuit_oracle(const std::vector<int>& angles) {
  StateVector s = quantum::prepare_qubit(quantum::QubitPreparation::plus(Angle(0)));
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    s.apply_rz(0, -Angle(angles[i]));
    s.apply_h(0);
  }
  const double p1 = s.rotated_one_probability(0, Angle(angles.back()));
  return {1 - p1, p1};
}

TEST(GraphTest, NormalizesAndValidates) {
  Graph g({3, 1, 2}, {{2, 1}, {3, 2}, {1, 2}});
  EXPECT_EQ(g.vertices(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_EQ(g.neighbors(2), (std::vector<Vertex>{1, 3}));
  EXPECT_THROW(Graph({1}, {{1, 1}}), Error);
  EXPECT_THROW(Graph({1}, {{1, 2}}), Error);
  EXPECT_THROW(g.neighbors(9), Error);
  EXPECT_TRUE(g.is_connected());
  EXPECT_FALSE(Graph({1, 2}, {}).is_connected());
}

TEST(ValidateFlowTest, Examples) {
  EXPECT_TRUE(validate_flow(path123(), {1}, {3}, shift123()).valid());

  Flow bad_edge{{{1, 3}, {2, 3}}, {1, 2, 3}};
  const auto r1 = validate_flow(path123(), {1}, {3}, bad_edge);
  EXPECT_TRUE(r1.violates(1));

  const auto r2 = validate_flow(path123(), {1}, {3}, shift123({2, 1, 3}));
  ASSERT_TRUE(r2.violates(2));
  bool v1 = false;
  for (const auto& v : r2.violations) v1 |= (v.condition == 2 && v.vertex == 1);
  EXPECT_TRUE(v1);
}

TEST(ValidateFlowTest, ConditionThreeAndStructure) {
  // 0-1, 1-2, 0-2 triangle with f(0)=1: 2 in N(1) must come after 0.
  Graph tri({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
  Flow f{{{0, 1}, {1, 2}}, {1, 0, 2}};
  EXPECT_TRUE(validate_flow(tri, {0}, {2}, f).violates(2));
  Flow g{{{0, 1}}, {2, 0, 1}};
  EXPECT_TRUE(validate_flow(tri, {0}, {1, 2}, g).violates(3));
  Flow missing{{{1, 2}}, {1, 2, 3}};
  EXPECT_TRUE(validate_flow(path123(), {1}, {3}, missing).violates(0));
  Flow to_input{{{1, 2}, {2, 1}}, {1, 2, 3}};
  EXPECT_TRUE(validate_flow(path123(), {1}, {3}, to_input).violates(0));
}

TEST(ValidateFlowTest, PathsAcceptOnlyTheShiftFlow) {
  for (int n = 1; n <= 8; ++n) {
    const Graph g = Graph::path(n);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    // Every successor map on {0..n-2} into {1..n-1}, every order.
    const int m = n - 1;
    std::size_t accepted = 0;
    std::vector<int> f(static_cast<std::size_t>(m), 1);
    while (true) {
      std::map<Vertex, Vertex> succ;
      for (int i = 0; i < m; ++i) succ[i] = f[static_cast<std::size_t>(i)];
      std::vector<Vertex> perm = order;
      do {
        if (validate_flow(g, {0}, {n - 1}, Flow{succ, perm}).valid()) {
          ++accepted;
          for (int i = 0; i < m; ++i) EXPECT_EQ(succ[i], i + 1);
          EXPECT_EQ(perm, order);
        }
      } while (n <= 6 && std::next_permutation(perm.begin(), perm.end()));
      int i = 0;
      while (i < m && ++f[static_cast<std::size_t>(i)] == n) f[static_cast<std::size_t>(i++)] = 1;
      if (i == m) break;
    }
    EXPECT_EQ(accepted, 1u) << "n=" << n;
  }
}

TEST(DependencySetsTest, Examples) {
  const MeasurementPattern p(path123(), {1}, {3}, {}, shift123());
  EXPECT_EQ(dependency_sets(p, 2).x, (std::vector<Vertex>{1}));
  EXPECT_TRUE(dependency_sets(p, 2).z.empty());
  EXPECT_TRUE(dependency_sets(p, 1).x.empty());
  EXPECT_TRUE(dependency_sets(p, 1).z.empty());
  EXPECT_THROW(dependency_sets(p, 7), Error);

  Graph p4({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
  const MeasurementPattern q(p4, {1}, {4}, {}, Flow{{{1, 2}, {2, 3}, {3, 4}}, {1, 2, 3, 4}});
  // Brute force: S_Z(v) = {j != v : v in N(f(j))}.
  for (Vertex v : p4.vertices()) {
    std::vector<Vertex> z;
    for (const auto& [j, fj] : q.flow().successor) {
      const auto& nb = p4.neighbors(fj);
      if (j != v && std::find(nb.begin(), nb.end(), v) != nb.end()) z.push_back(j);
    }
    EXPECT_EQ(dependency_sets(q, v).z, z) << "v=" << v;
  }
  EXPECT_EQ(dependency_sets(q, 3).z, (std::vector<Vertex>{1}));
  EXPECT_TRUE(dependency_sets(q, 2).z.empty());
  EXPECT_EQ(dependency_sets(q, 4).z, (std::vector<Vertex>{2}));
}

TEST(UpdateAngleTest, Examples) {
  EXPECT_EQ(update_angle(Angle(2), 0, 0), Angle(2));
  EXPECT_EQ(update_angle(Angle(1), 1, 0), Angle(7));
  EXPECT_EQ(update_angle(Angle(2), 1, 1), Angle(2));
  for (int k = 0; k < 8; ++k) {
    EXPECT_EQ(update_angle(update_angle(Angle(k), 1, 0), 1, 0), Angle(k));
    EXPECT_EQ(update_angle(Angle(k), 0, 1), Angle(k + 4));
  }
}

TEST(PatternTest, RejectsInvalidInput) {
  EXPECT_THROW(MeasurementPattern(path123(), {5}, {3}, {}, shift123()), Error);
  EXPECT_THROW(MeasurementPattern(path123(), {1}, {3}, {{9, Angle(1)}}, shift123()), Error);
  try {
    MeasurementPattern(path123(), {1}, {3}, {}, shift123({2, 1, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidFlow);
  }
  const MeasurementPattern p(path123(), {1}, {3}, {{1, Angle(3)}}, shift123());
  EXPECT_EQ(p.angle(3), Angle(0));
  EXPECT_EQ(p.angle(1), Angle(3));
}

TEST(RunDmbqcTest, Examples) {
  Rng rng(1);
  const MeasurementPattern single(Graph({1}, {}), {}, {1}, {}, Flow{{}, {1}});
  for (int i = 0; i < 100; ++i) EXPECT_EQ(run_dmbqc(single, StateVector(0), rng), OutputBits{0});
  EXPECT_NEAR(exact_output_distribution(single)[0], 1.0, 1e-12);

  const MeasurementPattern two(Graph({1, 2}, {{1, 2}}), {1}, {2}, {}, Flow{{{1, 2}}, {1, 2}});
  EXPECT_NEAR(exact_output_distribution(two)[1], 0.5, 1e-12);
  int ones = 0;
  for (int i = 0; i < 20000; ++i) ones += run_dmbqc(two, plus_input(two), rng)[0];
  EXPECT_NEAR(ones / 20000.0, 0.5, 3 * std::sqrt(0.25 / 20000));
  EXPECT_THROW(run_dmbqc(two, StateVector(2), rng), Error);
}

TEST(RunDmbqcTest, PathMatchesCircuitOracle) {
  Rng rng(2);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> angles;
      for (int i = 0; i < n; ++i) angles.push_back(trial == 0 ? 0 : rng.angle().units());
      const auto pattern = path_pattern(n, angles);
      const auto oracle = path_circuit_oracle(angles);
      const auto exact = exact_output_distribution(pattern);
      EXPECT_NEAR(exact[1], oracle[1], 1e-9);
      // Every branch of the adaptive execution reproduces the oracle.
      std::vector<Vertex> measured;
      for (Vertex v : pattern.order()) {
        if (!pattern.is_output(v)) measured.push_back(v);
      }
      double total = 0.0;
      for (unsigned mask = 0; mask < (1u << measured.size()); ++mask) {
        std::map<Vertex, Bit> forced;
        for (std::size_t i = 0; i < measured.size(); ++i) forced[measured[i]] = (mask >> i) & 1u;
        const auto branch = dmbqc_branch(pattern, plus_input(pattern), forced);
        total += branch.probability;
        if (branch.probability > 0) {
          EXPECT_NEAR(branch.conditional[1], oracle[1], 1e-9);
        }
      }
      EXPECT_NEAR(total, 1.0, 1e-9);
    }
  }
}

TEST(RunDmbqcTest, EveryBranchOfEverySmallPatternIsDeterministic) {
  Rng rng(3);
  const auto patterns = enumerate_flow_patterns(4);
  ASSERT_GT(patterns.size(), 100u);
  for (const auto& base : patterns) {
    std::map<Vertex, Angle> angles;
    for (Vertex v : base.graph().vertices()) angles[v] = rng.angle();
    const auto pattern = base.with_angles(angles);
    // Random product input on I.
    StateVector input(0);
    for (std::size_t i = 0; i < pattern.inputs().size(); ++i) {
      input = input.tensor(quantum::prepare_qubit(quantum::QubitPreparation::plus(rng.angle())));
    }
    const auto oracle = exact_output_distribution(pattern, input);
    std::vector<Vertex> measured;
    for (Vertex v : pattern.order()) {
      if (!pattern.is_output(v)) measured.push_back(v);
    }
    for (unsigned mask = 0; mask < (1u << measured.size()); ++mask) {
      std::map<Vertex, Bit> forced;
      for (std::size_t i = 0; i < measured.size(); ++i) forced[measured[i]] = (mask >> i) & 1u;
      const auto branch = dmbqc_branch(pattern, input, forced);
      if (branch.probability < 1e-12) continue;
      double tvd = 0.0;
      for (std::size_t k = 0; k < oracle.size(); ++k) tvd += std::abs(oracle[k] - branch.conditional[k]);
      ASSERT_LT(tvd / 2, 1e-9) << pattern_to_json(pattern);
    }
  }
}

TEST(EnumerateTest, CountsAndValidity) {
  EXPECT_EQ(all_graphs(3).size(), 8u);
  EXPECT_EQ(connected_graphs(3).size(), 4u);
  EXPECT_EQ(connected_graphs(4).size(), 38u);
  for (const auto& p : enumerate_flow_patterns(3)) {
    EXPECT_TRUE(validate_flow(p.graph(), p.inputs(), p.outputs(), p.flow()).valid());
  }
}

TEST(OutputProbabilityTest, RequiresSingleOutput) {
  const MeasurementPattern two_out(Graph({1, 2}, {{1, 2}}), {}, {1, 2}, {}, Flow{{}, {1, 2}});
  EXPECT_THROW(output_one_probability(two_out), Error);
  EXPECT_NEAR(output_one_probability(path_pattern(3, {1, 2, 0})), path_circuit_oracle({1, 2, 0})[1], 1e-12);
}

TEST(PatternIoTest, RoundTrip) {
  const auto p = path_pattern(4, {1, 6, 3, 2});
  const auto q = parse_pattern(pattern_to_json(p));
  EXPECT_EQ(q.graph(), p.graph());
  EXPECT_EQ(q.angles(), p.angles());
  EXPECT_EQ(q.order(), p.order());
  EXPECT_EQ(q.flow().successor, p.flow().successor);
}

std::string error_of(const std::string& text) {
  try {
    parse_pattern(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    return e.what();
  }
  return "";
}

TEST(PatternIoTest, ErrorsCarryLineNumbers) {
  const std::string unknown =
      "{\n  \"vertices\": [0, 1],\n  \"edges\": [[0, 1]],\n  \"inputs\": [0],\n  \"outputs\": [1],\n"
      "  \"colour\": 3,\n  \"flow\": {\"0\": 1},\n  \"order\": [0, 1]\n}";
  EXPECT_NE(error_of(unknown).find("line 6: colour"), std::string::npos) << error_of(unknown);

  const std::string bad_flow =
      "{\n  \"vertices\": [0, 1],\n  \"edges\": [[0, 1]],\n  \"inputs\": [0],\n  \"outputs\": [1],\n"
      "  \"flow\": {\"0\": 1},\n  \"order\": [1, 0]\n}";
  EXPECT_NE(error_of(bad_flow).find("line 7"), std::string::npos) << error_of(bad_flow);

  const std::string syntax = "{\n  \"vertices\": [0, 1],\n  \"edges\": [[0, 1]\n}";
  EXPECT_NE(error_of(syntax).find("line 4"), std::string::npos) << error_of(syntax);

  const std::string bad_angle =
      "{\n  \"vertices\": [0],\n  \"edges\": [],\n  \"inputs\": [],\n  \"outputs\": [0],\n"
      "  \"angles\": {\"0\": 1.5},\n  \"flow\": {},\n  \"order\": [0]\n}";
  EXPECT_NE(error_of(bad_angle).find("line 6: angles"), std::string::npos) << error_of(bad_angle);
}

}  // namespace
}  // namespace vboe::mbqc
