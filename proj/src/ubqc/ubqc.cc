#include "vboe/ubqc/ubqc.h"

namespace vboe::ubqc {

using quantum::QuantumMemory;
using quantum::QubitHandle;
using quantum::QubitPreparation;
using quantum::StateVector;

namespace {

Bit ask(Server& server, Vertex v, Angle delta) {
  const auto answer = server.measure(v, delta);
  if (!answer) throw Error(ErrorCode::ServerTimeout, "no answer for vertex " + std::to_string(v));
  return *answer & 1;
}

}  // namespace

Angle corrected_angle(const mbqc::MeasurementPattern& pattern, Vertex v, const std::map<Vertex, Bit>& b,
                      const std::map<Vertex, Bit>& r) {
  std::map<Vertex, Bit> corrected;
  for (const auto& [j, bj] : b) {
    const auto it = r.find(j);
    corrected[j] = bj ^ (it == r.end() ? Bit{0} : it->second);
  }
  return mbqc::adapted_angle(pattern, v, corrected);
}

RoundResult run_ubqc_round(const mbqc::MeasurementPattern& pattern, Server& server, Rng& rng) {
  const auto& graph = pattern.graph();
  RoundResult result;
  RoundTranscript& t = result.transcript;
  t.kind = RoundKind::Computation;
  t.order = pattern.order();
  t.secrets = sample_secrets(graph, pattern.inputs(), rng);
  const BlindingSecrets& s = *t.secrets;

  auto memory = std::make_shared<QuantumMemory>();
  for (Vertex v : graph.vertices()) {
    StateVector q = quantum::prepare_qubit(QubitPreparation::plus(Angle(0)));
    if (pattern.is_input(v) && s.a_init.at(v)) q.apply_x(0);
    q.apply_rz(0, s.theta.at(v));
    t.sent[v] = QubitPreparation::plus(s.theta.at(v));
    server.receive_qubit(v, QubitHandle{memory, memory->allocate_qubit(q)});
  }
  server.entangle();

  for (Vertex v : pattern.order()) {
    const Angle phi_prime = corrected_angle(pattern, v, t.b, s.r);
    const Angle delta = blind_angle(phi_prime, s, v);
    t.delta[v] = delta;
    t.b[v] = ask(server, v, delta);
  }
  for (Vertex o : pattern.outputs()) result.output.push_back(t.b.at(o) ^ s.r.at(o));
  t.output = result.output;
  return result;
}

mbqc::OutputBits bdqc_ideal(const mbqc::MeasurementPattern& pattern, const OutputDeviation& deviation,
                            Rng& rng) {
  const auto dist = mbqc::exact_output_distribution(pattern);
  auto correct = mbqc::sample_output(dist, pattern.outputs().size(), rng);
  if (!deviation) return correct;
  auto out = deviation(correct, rng);
  if (out.size() != correct.size()) {
    throw Error(ErrorCode::DimensionMismatch, "deviation changed the output length");
  }
  return out;
}

mbqc::OutputBits bdqc_ideal(const mbqc::MeasurementPattern& pattern, Rng& rng) {
  return bdqc_ideal(pattern, OutputDeviation{}, rng);
}

RoundResult epr_split_round(const mbqc::MeasurementPattern& pattern, Server& server, Rng& rng,
                            EprRotation rotation) {
  const auto& graph = pattern.graph();
  auto memory = std::make_shared<QuantumMemory>();
  const double h = 0.70710678118654752440;
  const StateVector epr(2, {h, 0.0, 0.0, h});

  // Simulator part.
  std::map<Vertex, quantum::QubitId> kept;
  for (Vertex v : graph.vertices()) {
    const auto ids = memory->allocate(epr);
    kept[v] = ids[0];
    server.receive_qubit(v, QubitHandle{memory, ids[1]});
  }
  server.entangle();
  RoundResult result;
  RoundTranscript& t = result.transcript;
  t.kind = RoundKind::Computation;
  t.order = pattern.order();
  for (Vertex v : pattern.order()) {
    t.delta[v] = rng.angle();
    t.b[v] = ask(server, v, t.delta[v]);
  }

  // Resource part.
  BlindingSecrets s;
  for (Vertex v : graph.vertices()) s.a_init[v] = 0;
  for (Vertex v : pattern.inputs()) {
    const auto input = memory->allocate_qubit(quantum::prepare_qubit(QubitPreparation::plus(Angle(0))));
    memory->apply_cnot(input, kept[v]);
    s.a_init[v] = memory->measure_computational(kept[v], rng);
    kept[v] = input;
  }
  s.a_prop = propagate_a_init(graph, s.a_init);
  for (Vertex v : pattern.order()) {
    const Angle phi_prime = corrected_angle(pattern, v, t.b, s.r);
    const Bit a = s.a_init[v];
    const Angle tail = Angle::pi_times(s.a_prop[v]);
    const Angle theta_prime = rotation == EprRotation::Teleported
                                  ? Angle::signed_by(a, t.delta[v]) - phi_prime - tail
                                  : t.delta[v] - Angle::signed_by(a, phi_prime) - tail;
    memory->apply_rz(kept[v], theta_prime);
    memory->apply_h(kept[v]);
    s.r[v] = memory->measure_computational(kept[v], rng);
    // The theta_v a direct preparation would have needed for the same delta.
    s.theta[v] = t.delta[v] - Angle::signed_by(a, phi_prime) - Angle::pi_times(s.r[v] ^ s.a_prop[v]);
    t.sent[v] = QubitPreparation::plus(s.theta[v]);
  }
  for (Vertex o : pattern.outputs()) result.output.push_back(t.b.at(o) ^ s.r.at(o));
  t.secrets = std::move(s);
  t.output = result.output;
  return result;
}

}  // namespace vboe::ubqc
