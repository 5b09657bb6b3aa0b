#include "vboe/quantum/density_matrix.h"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace vboe::quantum {

DensityMatrix::DensityMatrix(std::size_t num_qubits, Matrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be 2^n x 2^n");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
    throw Error(ErrorCode::BadDistribution, "density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Amplitude(1, 0)) > kTolerance) {
    throw Error(ErrorCode::BadDistribution, "density matrix trace is not 1");
  }
  if (min_eigenvalue() < -kTolerance) {
    throw Error(ErrorCode::BadDistribution, "density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& state) {
  const auto dim = static_cast<Eigen::Index>(state.dimension());
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) psi(i) = state[static_cast<std::size_t>(i)];
  return DensityMatrix(state.num_qubits(), psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  Matrix m = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(num_qubits, std::move(m));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix::max_abs_difference(const DensityMatrix& other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw Error(ErrorCode::DimensionMismatch, "comparing density matrices of different size");
  }
  return (entries_ - other.entries_).cwiseAbs().maxCoeff();
}

DensityMatrix average_density(std::span<const WeightedState> ensemble) {
  if (ensemble.empty()) throw Error(ErrorCode::BadDistribution, "empty ensemble");
  const std::size_t n = ensemble.front().state.num_qubits();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DensityMatrix::Matrix sum = DensityMatrix::Matrix::Zero(dim, dim);
  double total = 0.0;
  for (const auto& [p, state] : ensemble) {
    if (state.num_qubits() != n) {
      throw Error(ErrorCode::DimensionMismatch, "ensemble states differ in qubit count");
    }
    if (p < 0.0) throw Error(ErrorCode::BadDistribution, "negative probability");
    total += p;
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) psi(i) = state[static_cast<std::size_t>(i)];
    sum += p * (psi * psi.adjoint());
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw Error(ErrorCode::BadDistribution, "probabilities do not sum to 1");
  }
  return DensityMatrix(n, std::move(sum));
}

}  // namespace vboe::quantum
