#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "vboe/mbqc/graph.h"
#include "vboe/ubqc/server.h"

namespace vboe::adversary {

// Where a Pauli deviation sits relative to the measurement Rz(-delta)
// followed by an X-basis readout.
enum class PauliFrame {
  // Between Rz(-delta) and the readout: Z and Y flip the answer, X is
  // invisible.
  Measurement,
  // On the qubit as held, before Rz(-delta).
  Computational,
};

const char* to_string(PauliFrame frame);
PauliFrame parse_pauli_frame(const std::string& name);

// Applies P to the qubit at register position q in the given frame, for a
// measurement at angle delta.
void apply_pauli_deviation(quantum::StateVector& state, std::size_t q, quantum::Pauli p, Angle delta,
                           PauliFrame frame);

// Buffers received qubits, applies CZ on every edge on entangle(), answers
// measure(v, delta) with a rotated measurement.
class HonestServer : public ubqc::Server {
 public:
  HonestServer(mbqc::Graph graph, std::uint64_t seed);

  void receive_qubit(Vertex v, quantum::QubitHandle qubit) override;
  void entangle() override;
  std::optional<Bit> measure(Vertex v, Angle delta) override;

 protected:
  // Runs just before the honest measurement of v.
  virtual void before_measure(Vertex, Angle, quantum::QuantumMemory&, quantum::QubitId) {}
  virtual Bit transform_answer(Vertex, Bit honest) { return honest; }
  Rng& rng() { return rng_; }
  const mbqc::Graph& graph() const { return graph_; }

 private:
  mbqc::Graph graph_;
  Rng rng_;
  std::map<Vertex, quantum::QubitHandle> qubits_;
  bool entangled_ = false;
};

// Honest except for the Pauli applied to each mapped vertex just before its
// measurement. Throws UnknownVertex for vertices outside the graph.
class PauliAttackServer : public HonestServer {
 public:
  PauliAttackServer(mbqc::Graph graph, std::map<Vertex, quantum::Pauli> paulis, PauliFrame frame,
                    std::uint64_t seed);

 protected:
  void before_measure(Vertex v, Angle delta, quantum::QuantumMemory& memory, quantum::QubitId id) override;

 private:
  std::map<Vertex, quantum::Pauli> paulis_;
  PauliFrame frame_;
};

enum class AnswerStrategy { FlipAnswers, RandomAnswers };

// FlipAnswers negates the honest answer; RandomAnswers ignores the qubits
// and returns fair coins.
class AnswerStrategyServer : public HonestServer {
 public:
  AnswerStrategyServer(mbqc::Graph graph, AnswerStrategy strategy, std::uint64_t seed);
  std::optional<Bit> measure(Vertex v, Angle delta) override;

 private:
  AnswerStrategy strategy_;
};

// Arbitrary action on the server's register before each measurement.
using CustomHook =
    std::function<void(Vertex, Angle, quantum::QuantumMemory&, quantum::QubitId, Rng&)>;

class CustomServer : public HonestServer {
 public:
  CustomServer(mbqc::Graph graph, CustomHook hook, std::uint64_t seed);

 protected:
  void before_measure(Vertex v, Angle delta, quantum::QuantumMemory& memory, quantum::QubitId id) override;

 private:
  CustomHook hook_;
};

std::unique_ptr<ubqc::Server> honest_server(const mbqc::Graph& graph, std::uint64_t seed);
std::unique_ptr<ubqc::Server> pauli_attack_server(const mbqc::Graph& graph,
                                                  std::map<Vertex, quantum::Pauli> paulis,
                                                  std::uint64_t seed,
                                                  PauliFrame frame = PauliFrame::Measurement);
std::unique_ptr<ubqc::Server> answer_strategy_server(const mbqc::Graph& graph, AnswerStrategy strategy,
                                                     std::uint64_t seed);

}  // namespace vboe::adversary
