#include "irreal/observable.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <stdexcept>
#include <utility>

namespace irreal {

ProjectiveObservable::ProjectiveObservable(
    CompositeSpace space, std::string subsystem,
    std::vector<Eigen::MatrixXcd> projectors, double projector_tol)
    : space_(std::move(space)),
      subsystem_(std::move(subsystem)),
      projectors_(std::move(projectors)) {
  subsystem_index_ = space_.index_of(subsystem_);
  const int d = space_.factor(subsystem_index_).dim;

  if (projectors_.empty()) {
    throw std::invalid_argument("observable needs at least one projector");
  }
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t a = 0; a < projectors_.size(); ++a) {
    const Eigen::MatrixXcd& p = projectors_[a];
    if (p.rows() != d || p.cols() != d) {
      throw std::invalid_argument("projector shape does not match subsystem");
    }
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > projector_tol) {
      throw std::invalid_argument("projector is not Hermitian");
    }
    if ((p * p - p).cwiseAbs().maxCoeff() > projector_tol) {
      throw std::invalid_argument("projector is not idempotent");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if ((p * projectors_[b]).cwiseAbs().maxCoeff() > projector_tol) {
        throw std::invalid_argument("projectors are not mutually orthogonal");
      }
    }
    sum += p;
  }
  if ((sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() >
      projector_tol) {
    throw std::invalid_argument("projectors do not sum to the identity");
  }
}

int ProjectiveObservable::subsystem_dim() const {
  return space_.factor(subsystem_index_).dim;
}

Eigen::MatrixXcd ProjectiveObservable::embedded_projector(std::size_t a) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t i = 0; i < space_.factor_count(); ++i) {
    const int d = space_.factor(i).dim;
    const Eigen::MatrixXcd block =
        (i == subsystem_index_) ? projectors_.at(a)
                                : Eigen::MatrixXcd::Identity(d, d);
    out = Eigen::kroneckerProduct(out, block).eval();
  }
  return out;
}

ProjectiveObservable ProjectiveObservable::from_basis(
    CompositeSpace space, std::string subsystem,
    const Eigen::MatrixXcd& basis) {
  std::vector<Eigen::MatrixXcd> projectors;
  projectors.reserve(basis.cols());
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    projectors.push_back(basis.col(c) * basis.col(c).adjoint());
  }
  return ProjectiveObservable(std::move(space), std::move(subsystem),
                              std::move(projectors));
}

ProjectiveObservable ProjectiveObservable::computational(
    CompositeSpace space, std::string subsystem) {
  const int d = space.factor(space.index_of(subsystem)).dim;
  return from_basis(std::move(space), std::move(subsystem),
                    Eigen::MatrixXcd::Identity(d, d));
}

}  // namespace irreal
