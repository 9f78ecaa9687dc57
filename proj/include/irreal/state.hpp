#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "irreal/composite_space.hpp"
#include "irreal/tolerances.hpp"

namespace irreal {

/// Normalized pure state over a composite space.
class StateVector {
 public:
  /// Throws std::invalid_argument if the length does not match the space
  /// or the squared norm deviates from 1 by more than norm_tol.
  StateVector(CompositeSpace space, Eigen::VectorXcd amplitudes,
              double norm_tol = tol::kNorm);

  const CompositeSpace& space() const { return space_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }

  /// <this|other>
  std::complex<double> overlap(const StateVector& other) const;

 private:
  CompositeSpace space_;
  Eigen::VectorXcd amplitudes_;
};

/// Computational basis state |digits[0], digits[1], ...>.
StateVector basis_state(const CompositeSpace& space,
                        const std::vector<int>& digits);

/// Density operator over a composite space. Construction validates
/// hermiticity, unit trace, and positivity (eigenvalues >= -eig_floor).
class DensityOperator {
 public:
  DensityOperator(CompositeSpace space, Eigen::MatrixXcd matrix,
                  double hermiticity_tol = tol::kHermiticity,
                  double trace_tol = tol::kTrace,
                  double eig_floor = tol::kEigenvalueFloor);

  static DensityOperator pure(const StateVector& psi);
  static DensityOperator maximally_mixed(const CompositeSpace& space);

  const CompositeSpace& space() const { return space_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  CompositeSpace space_;
  Eigen::MatrixXcd matrix_;
};

/// Probability vector: nonnegative entries summing to 1.
class ClassicalDistribution {
 public:
  explicit ClassicalDistribution(Eigen::VectorXd probabilities,
                                 double sum_tol = tol::kDistribution);

  const Eigen::VectorXd& probabilities() const { return probabilities_; }
  int size() const { return static_cast<int>(probabilities_.size()); }

 private:
  Eigen::VectorXd probabilities_;
};

}  // namespace irreal
