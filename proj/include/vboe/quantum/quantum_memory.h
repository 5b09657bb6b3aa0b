#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "vboe/quantum/state_vector.h"

namespace vboe::quantum {

using QubitId = std::uint32_t;

// Joint register addressed by stable qubit ids. One instance backs one
// delegated round: the client allocates the qubits it sends, and whoever
// holds an id may act on that qubit. Measured qubits leave the register.
class QuantumMemory {
 public:
  // Appends the fragment's qubits; returns their ids in fragment order.
  std::vector<QubitId> allocate(const StateVector& fragment);
  QubitId allocate_qubit(const StateVector& single);

  bool contains(QubitId id) const;
  std::size_t size() const { return ids_.size(); }
  const StateVector& state() const { return state_; }
  // Current register position of a qubit; throws IndexOutOfRange.
  std::size_t position(QubitId id) const;

  void apply_cz(QubitId a, QubitId b);
  void apply_cnot(QubitId control, QubitId target);
  void apply_rz(QubitId q, Angle theta);
  void apply_h(QubitId q);
  void apply_pauli(QubitId q, Pauli p);

  Bit measure_rotated(QubitId q, Angle delta, Rng& rng);
  Bit measure_computational(QubitId q, Rng& rng);

 private:
  void remove(std::size_t position, StateVector reduced);

  StateVector state_;
  std::vector<QubitId> ids_;
  QubitId next_id_ = 0;
};

// A qubit handed from one party to another: the shared memory plus the id.
struct QubitHandle {
  std::shared_ptr<QuantumMemory> memory;
  QubitId id = 0;
};

}  // namespace vboe::quantum
