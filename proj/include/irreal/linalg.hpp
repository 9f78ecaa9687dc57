#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "irreal/state.hpp"
#include "irreal/tolerances.hpp"

namespace irreal {

/// Kronecker composition in subsystem order; the result space is the
/// concatenation of the factor spaces (labels must stay unique).
StateVector tensor_product(std::span<const StateVector> factors);
DensityOperator tensor_product(std::span<const DensityOperator> factors);

StateVector tensor_product(const StateVector& a, const StateVector& b);
StateVector tensor_product(const StateVector& a, const StateVector& b,
                           const StateVector& c);
DensityOperator tensor_product(const DensityOperator& a,
                               const DensityOperator& b);

/// Trace out every factor not named in `keep`. The result lives on the
/// kept factors in their original relative order. Unknown labels and an
/// empty keep set throw std::invalid_argument.
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::string>& keep);

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix. Inputs farther than
/// hermiticity_tol from Hermitian (max-abs entrywise) are rejected with
/// std::invalid_argument.
SpectralDecomposition spectral_decomposition(
    const Eigen::MatrixXcd& hermitian,
    double hermiticity_tol = tol::kSpectralHermiticity);

StateVector apply_unitary(const Eigen::MatrixXcd& unitary,
                          const StateVector& psi);
DensityOperator apply_unitary(const Eigen::MatrixXcd& unitary,
                              const DensityOperator& rho);

}  // namespace irreal
