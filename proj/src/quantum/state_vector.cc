#include "vboe/quantum/state_vector.h"

#include <array>
#include <cmath>
#include <string>

namespace vboe {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::ZeroNormProjection: return "ZeroNormProjection";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadDistribution: return "BadDistribution";
    case ErrorCode::InvalidFlow: return "InvalidFlow";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::ServerTimeout: return "ServerTimeout";
    case ErrorCode::ProtocolOrderViolation: return "ProtocolOrderViolation";
    case ErrorCode::NotATrap: return "NotATrap";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DirectionMismatch: return "DirectionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MismatchFound: return "MismatchFound";
  }
  return "Unknown";
}

}  // namespace vboe

namespace vboe::quantum {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Inserts bit b at position q of a (q)-low-bit-split index.
inline std::size_t insert_bit(std::size_t index, std::size_t q, std::size_t b) {
  const std::size_t low = index & ((std::size_t{1} << q) - 1);
  const std::size_t high = index >> q;
  return (high << (q + 1)) | (b << q) | low;
}

}  // namespace

Amplitude phase(Angle angle) {
  static const std::array<Amplitude, 8> table = {
      Amplitude(1, 0),          Amplitude(kInvSqrt2, kInvSqrt2),
      Amplitude(0, 1),          Amplitude(-kInvSqrt2, kInvSqrt2),
      Amplitude(-1, 0),         Amplitude(-kInvSqrt2, -kInvSqrt2),
      Amplitude(0, -1),         Amplitude(kInvSqrt2, -kInvSqrt2),
  };
  return table[static_cast<std::size_t>(angle.units())];
}

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw Error(ErrorCode::DimensionMismatch,
                "register of " + std::to_string(num_qubits) + " qubits exceeds capacity");
  }
  amps_.assign(std::size_t{1} << num_qubits, Amplitude(0, 0));
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits > kMaxQubits || amps_.size() != (std::size_t{1} << num_qubits)) {
    throw Error(ErrorCode::DimensionMismatch, "amplitude count does not match 2^n");
  }
  if (std::abs(norm() - 1.0) > kTolerance) {
    throw Error(ErrorCode::BadDistribution, "state is not normalized");
  }
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

void StateVector::check_qubit(std::size_t q) const {
  if (q >= num_qubits_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "qubit " + std::to_string(q) + " of " + std::to_string(num_qubits_));
  }
}

void StateVector::apply_cz(std::size_t i, std::size_t j) {
  check_qubit(i);
  check_qubit(j);
  if (i == j) throw Error(ErrorCode::EqualIndices, "CZ needs two distinct qubits");
  const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    if ((k & mask) == mask) amps_[k] = -amps_[k];
  }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw Error(ErrorCode::EqualIndices, "CNOT needs two distinct qubits");
  const std::size_t c = std::size_t{1} << control;
  const std::size_t t = std::size_t{1} << target;
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    if ((k & c) && !(k & t)) std::swap(amps_[k], amps_[k | t]);
  }
}

void StateVector::apply_rz(std::size_t q, Angle theta) {
  check_qubit(q);
  if (theta == Angle(0)) return;
  const Amplitude f = phase(theta);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    if (k & bit) amps_[k] *= f;
  }
}

void StateVector::apply_x(std::size_t q) {
  check_qubit(q);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    if (!(k & bit)) std::swap(amps_[k], amps_[k | bit]);
  }
}

void StateVector::apply_z(std::size_t q) { apply_rz(q, Angle::pi()); }

void StateVector::apply_h(std::size_t q) {
  check_qubit(q);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    if (k & bit) continue;
    const Amplitude a0 = amps_[k];
    const Amplitude a1 = amps_[k | bit];
    amps_[k] = (a0 + a1) * kInvSqrt2;
    amps_[k | bit] = (a0 - a1) * kInvSqrt2;
  }
}

StateVector StateVector::tensor(const StateVector& high) const {
  const std::size_t n = num_qubits_ + high.num_qubits_;
  if (n > kMaxQubits) throw Error(ErrorCode::DimensionMismatch, "tensor product exceeds capacity");
  std::vector<Amplitude> out(std::size_t{1} << n);
  for (std::size_t h = 0; h < high.amps_.size(); ++h) {
    for (std::size_t l = 0; l < amps_.size(); ++l) {
      out[(h << num_qubits_) | l] = high.amps_[h] * amps_[l];
    }
  }
  return StateVector(Unchecked{}, n, std::move(out));
}

Projection StateVector::finish_projection(std::vector<Amplitude> reduced) const {
  double p = 0.0;
  for (const auto& a : reduced) p += std::norm(a);
  Projection result;
  result.probability = p;
  if (p > 1e-300) {
    const double scale = 1.0 / std::sqrt(p);
    for (auto& a : reduced) a *= scale;
    result.state = StateVector(Unchecked{}, num_qubits_ - 1, std::move(reduced));
  }
  return result;
}

Projection StateVector::project_rotated(std::size_t q, Angle delta, Bit outcome) const {
  check_qubit(q);
  // <(-1)^b_delta| = (<0| + (-1)^b e^{-i delta} <1|) / sqrt2
  Amplitude coeff = std::conj(phase(delta));
  if (outcome & 1) coeff = -coeff;
  std::vector<Amplitude> reduced(amps_.size() / 2);
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    reduced[k] = (amps_[insert_bit(k, q, 0)] + coeff * amps_[insert_bit(k, q, 1)]) * kInvSqrt2;
  }
  return finish_projection(std::move(reduced));
}

Projection StateVector::project_computational(std::size_t q, Bit outcome) const {
  check_qubit(q);
  std::vector<Amplitude> reduced(amps_.size() / 2);
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    reduced[k] = amps_[insert_bit(k, q, outcome & 1)];
  }
  return finish_projection(std::move(reduced));
}

double StateVector::rotated_one_probability(std::size_t q, Angle delta) const {
  check_qubit(q);
  const Amplitude coeff = -std::conj(phase(delta));
  double p = 0.0;
  for (std::size_t k = 0; k < amps_.size() / 2; ++k) {
    p += std::norm((amps_[insert_bit(k, q, 0)] + coeff * amps_[insert_bit(k, q, 1)]) * kInvSqrt2);
  }
  return p;
}

StateVector prepare_qubit(const QubitPreparation& preparation) {
  if (preparation.kind == QubitPreparation::Kind::Computational) {
    std::vector<Amplitude> amps(2, Amplitude(0, 0));
    amps[preparation.bit & 1] = 1.0;
    return StateVector(1, std::move(amps));
  }
  return StateVector(1, {Amplitude(kInvSqrt2, 0), phase(preparation.theta) * kInvSqrt2});
}

StateVector apply_cz(StateVector state, std::size_t i, std::size_t j) {
  state.apply_cz(i, j);
  return state;
}

StateVector apply_rz(StateVector state, std::size_t q, Angle theta) {
  state.apply_rz(q, theta);
  return state;
}

namespace {

Measurement sample(const Projection& zero, const Projection& one,
                   Rng& rng) {
  const bool take_one = rng.uniform() * (zero.probability + one.probability) >= zero.probability;
  const auto& chosen = take_one ? one : zero;
  if (!chosen.state) {
    throw Error(ErrorCode::ZeroNormProjection, "sampled a zero-probability branch");
  }
  return Measurement{static_cast<Bit>(take_one ? 1 : 0), *chosen.state};
}

}  // namespace

Measurement measure_rotated(const StateVector& state, std::size_t q, Angle delta, Rng& rng) {
  return sample(state.project_rotated(q, delta, 0), state.project_rotated(q, delta, 1), rng);
}

Measurement measure_computational(const StateVector& state, std::size_t q, Rng& rng) {
  return sample(state.project_computational(q, 0), state.project_computational(q, 1), rng);
}

const char* to_string(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

Pauli parse_pauli(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw Error(ErrorCode::BadParams, std::string("unknown Pauli '") + c + "'");
  }
}

void apply_pauli(StateVector& state, std::size_t q, Pauli p) {
  switch (p) {
    case Pauli::I: break;
    case Pauli::X: state.apply_x(q); break;
    case Pauli::Y:
      state.apply_x(q);
      state.apply_z(q);
      break;
    case Pauli::Z: state.apply_z(q); break;
  }
}

}  // namespace vboe::quantum
