#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "irreal/entropy.hpp"
#include "irreal/observable.hpp"
#include "irreal/state.hpp"

namespace irreal {

/// Unrevealed projective measurement of the observable: the map
/// rho -> sum_a (P_a x 1) rho (P_a x 1). Completely positive, trace
/// preserving, unital, and idempotent; its fixed points are the states
/// for which the observable has a definite (if unknown) value.
DensityOperator unrevealed_measurement(const DensityOperator& rho,
                                       const ProjectiveObservable& obs);

/// True iff the unrevealed measurement leaves rho unchanged, i.e.
/// max-abs(Phi(rho) - rho) <= tol.
bool is_reality_state(const DensityOperator& rho,
                      const ProjectiveObservable& obs, double tol);

/// Entropic distance S(Phi(rho)) - S(rho) between a state and its
/// definite-value projection; zero iff the observable is definite for rho.
/// Results in [-metric_clamp, 0] clamp to 0; below that raises
/// std::domain_error (an entropy bug, not float noise).
double irreality(const DensityOperator& rho, const ProjectiveObservable& obs,
                 double metric_clamp = tol::kMetricClamp);

/// Irreality of the reduced state on the observable's own subsystem.
double local_irreality(const DensityOperator& rho,
                       const ProjectiveObservable& obs,
                       double metric_clamp = tol::kMetricClamp);

/// Correlation part of irreality: irreality - local_irreality (the
/// basis-dependent discord for this observable).
double basis_discord(const DensityOperator& rho,
                     const ProjectiveObservable& obs,
                     double metric_clamp = tol::kMetricClamp);

/// Contextual realism-based nonlocality: the drop in A-irreality caused
/// by an unrevealed measurement of B on a different subsystem,
/// I_A(rho) - I_A(Phi_B(rho)). Nonnegative; vanishes for product states
/// and for fixed points of either measurement map.
double contextual_rbn(const DensityOperator& rho,
                      const ProjectiveObservable& obs_a,
                      const ProjectiveObservable& obs_b,
                      double metric_clamp = tol::kMetricClamp);

/// Lower-bound gap of the irreality uncertainty relation for two
/// observables on the same subsystem:
///   I_A(rho) + I_A'(rho) - S(rho || 1_A/d_A x rho_rest).
/// Nonnegative up to float noise for every state; zero requires
/// rho = 1_A/d_A x rho_rest. The reference state always has full support
/// on rho's support, so an infinite relative entropy indicates a numeric
/// defect and raises std::domain_error.
double irreality_uncertainty_gap(const DensityOperator& rho,
                                 const ProjectiveObservable& obs_a,
                                 const ProjectiveObservable& obs_a2);

/// Classically correlated two-part state sum_k p_k |a_k><a_k| x |b_k><b_k|
/// built from orthonormal families; a fixed point of both primed
/// measurement maps by construction.
DensityOperator reality_state(const ClassicalDistribution& dist,
                              const std::vector<Eigen::VectorXcd>& basis_a,
                              const std::vector<Eigen::VectorXcd>& basis_b,
                              std::string label_a = "A",
                              std::string label_b = "B");

}  // namespace irreal
