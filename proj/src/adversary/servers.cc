#include "vboe/adversary/servers.h"

namespace vboe::adversary {

using quantum::Pauli;

const char* to_string(PauliFrame frame) {
  return frame == PauliFrame::Measurement ? "measurement" : "computational";
}

PauliFrame parse_pauli_frame(const std::string& name) {
  if (name == "measurement") return PauliFrame::Measurement;
  if (name == "computational") return PauliFrame::Computational;
  throw Error(ErrorCode::BadParams, "unknown Pauli frame " + name);
}

void apply_pauli_deviation(quantum::StateVector& state, std::size_t q, Pauli p, Angle delta,
                           PauliFrame frame) {
  if (frame == PauliFrame::Computational) {
    quantum::apply_pauli(state, q, p);
    return;
  }
  // Rz(delta) P Rz(-delta), then the ordinary measurement at delta.
  state.apply_rz(q, -delta);
  quantum::apply_pauli(state, q, p);
  state.apply_rz(q, delta);
}

HonestServer::HonestServer(mbqc::Graph graph, std::uint64_t seed) : graph_(std::move(graph)), rng_(seed) {}

void HonestServer::receive_qubit(Vertex v, quantum::QubitHandle qubit) {
  if (!graph_.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  qubits_[v] = std::move(qubit);
}

void HonestServer::entangle() {
  for (const auto& [a, b] : graph_.edges()) {
    const auto& qa = qubits_.at(a);
    qa.memory->apply_cz(qa.id, qubits_.at(b).id);
  }
  entangled_ = true;
}

std::optional<Bit> HonestServer::measure(Vertex v, Angle delta) {
  if (!entangled_) {
    throw Error(ErrorCode::ProtocolOrderViolation, "measure before entangle at vertex " + std::to_string(v));
  }
  const auto it = qubits_.find(v);
  if (it == qubits_.end()) throw Error(ErrorCode::UnknownVertex, "no qubit for vertex " + std::to_string(v));
  auto& memory = *it->second.memory;
  before_measure(v, delta, memory, it->second.id);
  const Bit honest = memory.measure_rotated(it->second.id, delta, rng_);
  return transform_answer(v, honest);
}

PauliAttackServer::PauliAttackServer(mbqc::Graph graph, std::map<Vertex, Pauli> paulis, PauliFrame frame,
                                     std::uint64_t seed)
    : HonestServer(std::move(graph), seed), paulis_(std::move(paulis)), frame_(frame) {
  for (const auto& [v, p] : paulis_) {
    if (!this->graph().has_vertex(v)) {
      throw Error(ErrorCode::UnknownVertex, "Pauli deviation on unknown vertex " + std::to_string(v));
    }
  }
}

void PauliAttackServer::before_measure(Vertex v, Angle delta, quantum::QuantumMemory& memory,
                                       quantum::QubitId id) {
  const auto it = paulis_.find(v);
  if (it == paulis_.end() || it->second == Pauli::I) return;
  if (frame_ == PauliFrame::Computational) {
    memory.apply_pauli(id, it->second);
    return;
  }
  memory.apply_rz(id, -delta);
  memory.apply_pauli(id, it->second);
  memory.apply_rz(id, delta);
}

AnswerStrategyServer::AnswerStrategyServer(mbqc::Graph graph, AnswerStrategy strategy, std::uint64_t seed)
    : HonestServer(std::move(graph), seed), strategy_(strategy) {}

std::optional<Bit> AnswerStrategyServer::measure(Vertex v, Angle delta) {
  if (strategy_ == AnswerStrategy::RandomAnswers) return rng().bit();
  const auto honest = HonestServer::measure(v, delta);
  return static_cast<Bit>(*honest ^ 1);
}

CustomServer::CustomServer(mbqc::Graph graph, CustomHook hook, std::uint64_t seed)
    : HonestServer(std::move(graph), seed), hook_(std::move(hook)) {}

void CustomServer::before_measure(Vertex v, Angle delta, quantum::QuantumMemory& memory,
                                  quantum::QubitId id) {
  if (hook_) hook_(v, delta, memory, id, rng());
}

std::unique_ptr<ubqc::Server> honest_server(const mbqc::Graph& graph, std::uint64_t seed) {
  return std::make_unique<HonestServer>(graph, seed);
}

std::unique_ptr<ubqc::Server> pauli_attack_server(const mbqc::Graph& graph, std::map<Vertex, Pauli> paulis,
                                                  std::uint64_t seed, PauliFrame frame) {
  return std::make_unique<PauliAttackServer>(graph, std::move(paulis), frame, seed);
}

std::unique_ptr<ubqc::Server> answer_strategy_server(const mbqc::Graph& graph, AnswerStrategy strategy,
                                                     std::uint64_t seed) {
  return std::make_unique<AnswerStrategyServer>(graph, strategy, seed);
}

}  // namespace vboe::adversary
