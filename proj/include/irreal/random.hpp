#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>

#include "irreal/observable.hpp"
#include "irreal/state.hpp"

namespace irreal {

/// Deterministic source of random quantum objects for property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  Eigen::MatrixXcd ginibre(int rows, int cols);
  /// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
  Eigen::MatrixXcd haar_unitary(int dim);
  Eigen::VectorXcd haar_state(int dim);
  /// Full-rank mixed state G G^dag / Tr.
  Eigen::MatrixXcd wishart_density(int dim);
  ClassicalDistribution distribution(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

StateVector random_pure_state(const CompositeSpace& space, RandomSource& rng);
DensityOperator random_density_operator(const CompositeSpace& space,
                                        RandomSource& rng);
/// Rank-1 projective observable from a Haar-random basis of the subsystem.
ProjectiveObservable random_observable(const CompositeSpace& space,
                                       const std::string& subsystem,
                                       RandomSource& rng);

}  // namespace irreal
