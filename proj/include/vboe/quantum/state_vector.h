#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vboe/quantum/rng.h"
#include "vboe/types.h"

namespace vboe::quantum {

using Amplitude = std::complex<double>;

inline constexpr double kTolerance = 1e-9;
inline constexpr std::size_t kMaxQubits = 24;

// e^{i*angle}, exact for multiples of pi/2.
Amplitude phase(Angle angle);

struct Projection;

// Dense pure state on n qubits. Qubit q is bit q of the basis index.
// A register whose last qubit was measured out holds zero qubits and a single
// unit amplitude.
class StateVector {
 public:
  // |0...0> on num_qubits qubits.
  explicit StateVector(std::size_t num_qubits = 0);
  // Takes ownership of amplitudes; throws DimensionMismatch on bad length and
  // BadDistribution if the norm is not 1 within kTolerance.
  StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](std::size_t index) const { return amps_[index]; }
  double norm() const;

  // In-place gates.
  void apply_cz(std::size_t i, std::size_t j);
  void apply_cnot(std::size_t control, std::size_t target);
  void apply_rz(std::size_t q, Angle theta);
  void apply_x(std::size_t q);
  void apply_z(std::size_t q);
  void apply_h(std::size_t q);

  // Result qubits: this state's qubits first, then `high`'s.
  StateVector tensor(const StateVector& high) const;

  // Projects qubit q onto |(-1)^b_delta> = (|0> + (-1)^b e^{i delta}|1>)/sqrt2
  // and removes it. Returns the outcome probability and, when that
  // probability is nonzero, the normalized post-measurement state.
  Projection project_rotated(std::size_t q, Angle delta, Bit outcome) const;
  Projection project_computational(std::size_t q, Bit outcome) const;

  // Probability that measuring q at delta yields 1.
  double rotated_one_probability(std::size_t q, Angle delta) const;

 private:
  struct Unchecked {};
  StateVector(Unchecked, std::size_t num_qubits, std::vector<Amplitude> amplitudes)
      : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {}

  void check_qubit(std::size_t q) const;
  Projection finish_projection(std::vector<Amplitude> reduced) const;

  std::size_t num_qubits_;
  std::vector<Amplitude> amps_;
};

struct Projection {
  double probability = 0.0;
  std::optional<StateVector> state;
};

struct QubitPreparation {
  enum class Kind { PlusTheta, Computational };
  Kind kind = Kind::PlusTheta;
  Angle theta;
  Bit bit = 0;

  static QubitPreparation plus(Angle theta) { return {Kind::PlusTheta, theta, 0}; }
  static QubitPreparation computational(Bit b) { return {Kind::Computational, Angle(), b}; }
  friend bool operator==(const QubitPreparation&, const QubitPreparation&) = default;
};

StateVector prepare_qubit(const QubitPreparation& preparation);

// Pure counterparts of the in-place gates.
StateVector apply_cz(StateVector state, std::size_t i, std::size_t j);
StateVector apply_rz(StateVector state, std::size_t q, Angle theta);

struct Measurement {
  Bit outcome = 0;
  StateVector state;
};

// Measures qubit q in the basis {|+_delta>, |-_delta>} (outcome 0 for +) and
// removes it from the register.
Measurement measure_rotated(const StateVector& state, std::size_t q, Angle delta, Rng& rng);
Measurement measure_computational(const StateVector& state, std::size_t q, Rng& rng);

enum class Pauli { I, X, Y, Z };

const char* to_string(Pauli p);
Pauli parse_pauli(char c);

// Y is applied as Z*X (X first); the global phase is irrelevant here.
void apply_pauli(StateVector& state, std::size_t q, Pauli p);

}  // namespace vboe::quantum
