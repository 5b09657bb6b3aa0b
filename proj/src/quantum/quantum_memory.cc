#include "vboe/quantum/quantum_memory.h"

#include <algorithm>
#include <string>

namespace vboe::quantum {

std::vector<QubitId> QuantumMemory::allocate(const StateVector& fragment) {
  state_ = state_.tensor(fragment);
  std::vector<QubitId> fresh;
  fresh.reserve(fragment.num_qubits());
  for (std::size_t i = 0; i < fragment.num_qubits(); ++i) {
    fresh.push_back(next_id_++);
    ids_.push_back(fresh.back());
  }
  return fresh;
}

QubitId QuantumMemory::allocate_qubit(const StateVector& single) {
  if (single.num_qubits() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "expected a single-qubit fragment");
  }
  return allocate(single).front();
}

bool QuantumMemory::contains(QubitId id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::size_t QuantumMemory::position(QubitId id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) {
    throw Error(ErrorCode::IndexOutOfRange, "qubit id " + std::to_string(id) + " not held");
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

void QuantumMemory::apply_cz(QubitId a, QubitId b) { state_.apply_cz(position(a), position(b)); }

void QuantumMemory::apply_cnot(QubitId control, QubitId target) {
  state_.apply_cnot(position(control), position(target));
}

void QuantumMemory::apply_rz(QubitId q, Angle theta) { state_.apply_rz(position(q), theta); }

void QuantumMemory::apply_h(QubitId q) { state_.apply_h(position(q)); }

void QuantumMemory::apply_pauli(QubitId q, Pauli p) { quantum::apply_pauli(state_, position(q), p); }

void QuantumMemory::remove(std::size_t position, StateVector reduced) {
  state_ = std::move(reduced);
  ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(position));
}

Bit QuantumMemory::measure_rotated(QubitId q, Angle delta, Rng& rng) {
  const std::size_t pos = position(q);
  auto m = quantum::measure_rotated(state_, pos, delta, rng);
  remove(pos, std::move(m.state));
  return m.outcome;
}

Bit QuantumMemory::measure_computational(QubitId q, Rng& rng) {
  const std::size_t pos = position(q);
  auto m = quantum::measure_computational(state_, pos, rng);
  remove(pos, std::move(m.state));
  return m.outcome;
}

}  // namespace vboe::quantum
