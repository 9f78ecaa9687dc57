#pragma once

#include "irreal/state.hpp"
#include "irreal/tolerances.hpp"

namespace irreal {

/// H = -sum p ln p in nats, with 0 ln 0 := 0.
double shannon_entropy(const ClassicalDistribution& p);

/// S = -sum lambda ln lambda in nats. Eigenvalues in [-eig_floor, 0) are
/// clipped to 0; anything below -eig_floor raises std::domain_error.
double von_neumann_entropy(const DensityOperator& rho,
                           double eig_floor = tol::kEigenvalueFloor);

/// S(rho||sigma) = Tr(rho ln rho) - Tr(rho ln sigma). Returns +infinity
/// when rho carries more than support_tol of weight outside sigma's
/// support (eigenvalues <= support_tol). Spaces must match.
double relative_entropy(const DensityOperator& rho,
                        const DensityOperator& sigma,
                        double support_tol = tol::kSupport);

/// Tr(rho^2)
double purity(const DensityOperator& rho);

/// 1 - Tr(rho^2)
double linear_entropy(const DensityOperator& rho);

}  // namespace irreal
