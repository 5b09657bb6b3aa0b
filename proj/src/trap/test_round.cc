#include "vboe/trap/test_round.h"

#include <map>

namespace vboe::trap {

using quantum::QubitPreparation;

TestRoundPlan build_test_round(const mbqc::Graph& graph, const Coloring& coloring, Rng& rng) {
  if (coloring.size() == 0) throw Error(ErrorCode::BadParams, "empty colouring");
  TestRoundPlan plan;
  plan.color = static_cast<std::size_t>(rng.below(coloring.size()));
  plan.traps = coloring.classes[plan.color];
  for (Vertex v : graph.vertices()) {
    if (plan.is_trap(v)) {
      plan.trap_theta[v] = rng.angle();
      plan.trap_r[v] = rng.bit();
    } else {
      plan.dummy_bits[v] = rng.bit();
    }
  }
  return plan;
}

Bit expected_trap_bit(const TestRoundPlan& plan, const mbqc::Graph& graph, Vertex v) {
  if (!plan.is_trap(v)) throw Error(ErrorCode::NotATrap, "vertex " + std::to_string(v) + " is not a trap");
  Bit d = 0;
  for (Vertex k : graph.neighbors(v)) {
    const auto it = plan.dummy_bits.find(k);
    if (it != plan.dummy_bits.end()) d ^= it->second;
  }
  return plan.trap_r.at(v) ^ d;
}

TestRoundResult run_test_round(const TestRoundPlan& plan, const mbqc::Graph& graph, ubqc::Server& server,
                               Rng& rng, const std::vector<Vertex>& order) {
  TestRoundResult result;
  ubqc::RoundTranscript& t = result.transcript;
  t.kind = ubqc::RoundKind::Test;
  t.order = order;
  t.plan = plan;

  auto memory = std::make_shared<quantum::QuantumMemory>();
  for (Vertex v : graph.vertices()) {
    const QubitPreparation prep = plan.is_trap(v) ? QubitPreparation::plus(plan.trap_theta.at(v))
                                                  : QubitPreparation::computational(plan.dummy_bits.at(v));
    t.sent[v] = prep;
    server.receive_qubit(v, quantum::QubitHandle{memory, memory->allocate_qubit(quantum::prepare_qubit(prep))});
  }
  server.entangle();
  for (Vertex v : order) {
    const Angle delta =
        plan.is_trap(v) ? plan.trap_theta.at(v) + Angle::pi_times(plan.trap_r.at(v)) : rng.angle();
    t.delta[v] = delta;
    const auto answer = server.measure(v, delta);
    if (!answer) throw Error(ErrorCode::ServerTimeout, "no answer for vertex " + std::to_string(v));
    t.b[v] = *answer & 1;
  }
  for (Vertex v : plan.traps) {
    if (t.b.at(v) != expected_trap_bit(plan, graph, v)) ++result.failed_traps;
  }
  result.passed = result.failed_traps == 0;
  t.passed = result.passed;
  return result;
}

TestRoundResult run_test_round(const TestRoundPlan& plan, const mbqc::Graph& graph, ubqc::Server& server,
                               Rng& rng) {
  return run_test_round(plan, graph, server, rng, graph.vertices());
}

RvbqcVerdict rvbqc_accept(std::size_t failed_tests, std::size_t w_count,
                          const std::vector<mbqc::OutputBits>& outputs) {
  if (failed_tests >= w_count) return {};
  std::map<mbqc::OutputBits, std::size_t> counts;
  for (const auto& y : outputs) ++counts[y];
  for (const auto& [y, c] : counts) {
    if (2 * c > outputs.size()) return {true, y};
  }
  return {};
}

}  // namespace vboe::trap
