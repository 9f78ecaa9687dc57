#include "irreal/random.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace irreal {

double RandomSource::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Eigen::MatrixXcd RandomSource::ginibre(int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      g(r, c) = std::complex<double>(normal(engine_), normal(engine_));
    }
  }
  return g;
}

Eigen::MatrixXcd RandomSource::haar_unitary(int dim) {
  const Eigen::MatrixXcd g = ginibre(dim, dim);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> d = r(i, i);
    q.col(i) *= (std::abs(d) > 0.0) ? d / std::abs(d)
                                    : std::complex<double>(1.0, 0.0);
  }
  return q;
}

Eigen::VectorXcd RandomSource::haar_state(int dim) {
  Eigen::VectorXcd v = ginibre(dim, 1);
  v.normalize();
  return v;
}

Eigen::MatrixXcd RandomSource::wishart_density(int dim) {
  const Eigen::MatrixXcd g = ginibre(dim, dim);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Symmetrize away the last bits of float asymmetry.
  return ((rho + rho.adjoint()) / 2.0).eval();
}

ClassicalDistribution RandomSource::distribution(int n) {
  Eigen::VectorXd p(n);
  for (int i = 0; i < n; ++i) {
    p(i) = -std::log(std::uniform_real_distribution<double>(
        std::numeric_limits<double>::min(), 1.0)(engine_));
  }
  p /= p.sum();
  return ClassicalDistribution(std::move(p));
}

StateVector random_pure_state(const CompositeSpace& space, RandomSource& rng) {
  return StateVector(space, rng.haar_state(space.total_dim()));
}

DensityOperator random_density_operator(const CompositeSpace& space,
                                        RandomSource& rng) {
  return DensityOperator(space, rng.wishart_density(space.total_dim()));
}

ProjectiveObservable random_observable(const CompositeSpace& space,
                                       const std::string& subsystem,
                                       RandomSource& rng) {
  const int d = space.factor(space.index_of(subsystem)).dim;
  return ProjectiveObservable::from_basis(space, subsystem,
                                          rng.haar_unitary(d));
}

}  // namespace irreal
