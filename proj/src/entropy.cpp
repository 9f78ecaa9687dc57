#include "irreal/entropy.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace irreal {

namespace {

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      ((m + m.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// -sum x ln x over the entries, treating 0 ln 0 as 0.
double entropy_of(const Eigen::VectorXd& values) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > 0.0) {
      s -= values(i) * std::log(values(i));
    }
  }
  // Eigenvalues marginally above 1 contribute negative noise.
  return s < 0.0 ? 0.0 : s;
}

} // namespace

double shannon_entropy(const ClassicalDistribution& p) {
  return entropy_of(p.probabilities());
}

double von_neumann_entropy(const DensityOperator& rho, double eig_floor) {
  Eigen::VectorXd eigs = hermitian_eigenvalues(rho.matrix());
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    if (eigs(i) < -eig_floor) {
      throw std::domain_error("density operator eigenvalue below -" +
                              std::to_string(eig_floor));
    }
    if (eigs(i) < 0.0) {
      eigs(i) = 0.0;
    }
  }
  return entropy_of(eigs);
}

double relative_entropy(const DensityOperator& rho,
                        const DensityOperator& sigma, double support_tol) {
  if (!(rho.space() == sigma.space())) {
    throw std::invalid_argument("relative entropy of states on different spaces");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sig_solver(
      ((sigma.matrix() + sigma.matrix().adjoint()) / 2.0).eval());
  const Eigen::VectorXd& mu = sig_solver.eigenvalues();
  const Eigen::MatrixXcd& w = sig_solver.eigenvectors();

  // Weight of rho outside sigma's support decides finiteness.
  double off_support = 0.0;
  double cross = 0.0; // Tr(rho ln sigma), over supported directions
  for (Eigen::Index j = 0; j < mu.size(); ++j) {
    const double weight =
        std::real(w.col(j).dot(rho.matrix() * w.col(j)));
    if (mu(j) <= support_tol) {
      off_support += weight;
    } else {
      cross += weight * std::log(mu(j));
    }
  }
  if (off_support > support_tol) {
    return std::numeric_limits<double>::infinity();
  }

  Eigen::VectorXd lam = hermitian_eigenvalues(rho.matrix());
  double self = 0.0; // Tr(rho ln rho)
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) > 0.0) {
      self += lam(i) * std::log(lam(i));
    }
  }

  const double s = self - cross;
  return (s < 0.0 && s >= -tol::kMetricClamp) ? 0.0 : s;
}

double purity(const DensityOperator& rho) {
  return std::real((rho.matrix() * rho.matrix()).trace());
}

double linear_entropy(const DensityOperator& rho) {
  return 1.0 - purity(rho);
}

}  // namespace irreal
