#include "irreal/state.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace irreal {

StateVector::StateVector(CompositeSpace space, Eigen::VectorXcd amplitudes,
                         double norm_tol)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.total_dim()) {
    throw std::invalid_argument("amplitude vector length " +
                                std::to_string(amplitudes_.size()) +
                                " does not match space dimension " +
                                std::to_string(space_.total_dim()));
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > norm_tol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

std::complex<double> StateVector::overlap(const StateVector& other) const {
  if (other.dim() != dim()) {
    throw std::invalid_argument("overlap of states with different dimensions");
  }
  return amplitudes_.dot(other.amplitudes_); // conjugates *this
}

StateVector basis_state(const CompositeSpace& space,
                        const std::vector<int>& digits) {
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(space.total_dim());
  amp(space.ravel(digits)) = 1.0;
  return StateVector(space, std::move(amp));
}

DensityOperator::DensityOperator(CompositeSpace space, Eigen::MatrixXcd matrix,
                                 double hermiticity_tol, double trace_tol,
                                 double eig_floor)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() ||
      matrix_.rows() != space_.total_dim()) {
    throw std::invalid_argument("density matrix shape does not match space");
  }
  const double herm_dev =
      (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > hermiticity_tol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace().real() - 1.0) > trace_tol ||
      std::abs(matrix_.trace().imag()) > trace_tol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      ((matrix_ + matrix_.adjoint()) / 2.0).eval(),
      Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -eig_floor) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
  return DensityOperator(psi.space(),
                         psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityOperator DensityOperator::maximally_mixed(const CompositeSpace& space) {
  const int d = space.total_dim();
  return DensityOperator(space, Eigen::MatrixXcd::Identity(d, d) / double(d));
}

ClassicalDistribution::ClassicalDistribution(Eigen::VectorXd probabilities,
                                             double sum_tol)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.size() == 0) {
    throw std::invalid_argument("empty distribution");
  }
  if (probabilities_.minCoeff() < 0.0) {
    throw std::invalid_argument("distribution has a negative entry");
  }
  if (std::abs(probabilities_.sum() - 1.0) > sum_tol) {
    throw std::invalid_argument("distribution does not sum to 1");
  }
}

}  // namespace irreal
