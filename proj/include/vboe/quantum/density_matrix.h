#pragma once

#include <Eigen/Dense>
#include <span>

#include "vboe/quantum/state_vector.h"

namespace vboe::quantum {

// Mixed state on n qubits; used for exact audits of what the server holds.
class DensityMatrix {
 public:
  using Matrix = Eigen::MatrixXcd;

  // Validates Hermiticity, unit trace and positivity within kTolerance.
  DensityMatrix(std::size_t num_qubits, Matrix entries);

  static DensityMatrix pure(const StateVector& state);
  static DensityMatrix maximally_mixed(std::size_t num_qubits);

  std::size_t num_qubits() const { return num_qubits_; }
  const Matrix& entries() const { return entries_; }
  Amplitude operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

  Amplitude trace() const { return entries_.trace(); }
  double min_eigenvalue() const;
  // Largest entrywise |a - b|.
  double max_abs_difference(const DensityMatrix& other) const;

 private:
  std::size_t num_qubits_;
  Matrix entries_;
};

struct WeightedState {
  double probability = 0.0;
  StateVector state;
};

// sum_i p_i |psi_i><psi_i|
DensityMatrix average_density(std::span<const WeightedState> ensemble);

}  // namespace vboe::quantum
