#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "irreal/state.hpp"
#include "irreal/tolerances.hpp"

namespace irreal {

/// A complete family of mutually orthogonal projectors acting on one
/// subsystem of a composite space. Eigenvalue labels are irrelevant to
/// every metric built on the family and are not stored.
class ProjectiveObservable {
 public:
  /// Validates each projector (P = P*, P^2 = P), mutual orthogonality,
  /// and completeness (sum = identity) within projector_tol.
  ProjectiveObservable(CompositeSpace space, std::string subsystem,
                       std::vector<Eigen::MatrixXcd> projectors,
                       double projector_tol = tol::kProjector);

  const CompositeSpace& space() const { return space_; }
  const std::string& subsystem() const { return subsystem_; }
  std::size_t subsystem_index() const { return subsystem_index_; }
  int subsystem_dim() const;
  const std::vector<Eigen::MatrixXcd>& projectors() const {
    return projectors_;
  }
  std::size_t outcome_count() const { return projectors_.size(); }

  /// The a-th projector embedded on the full space: 1 x ... x P_a x ... x 1.
  Eigen::MatrixXcd embedded_projector(std::size_t a) const;

  /// Rank-1 projectors onto the columns of an orthonormal basis matrix.
  static ProjectiveObservable from_basis(CompositeSpace space,
                                         std::string subsystem,
                                         const Eigen::MatrixXcd& basis);

  /// Computational (diagonal) basis observable on the subsystem.
  static ProjectiveObservable computational(CompositeSpace space,
                                            std::string subsystem);

 private:
  CompositeSpace space_;
  std::string subsystem_;
  std::size_t subsystem_index_ = 0;
  std::vector<Eigen::MatrixXcd> projectors_;
};

}  // namespace irreal
