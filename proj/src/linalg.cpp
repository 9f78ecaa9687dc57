#include "irreal/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace irreal {

namespace {

CompositeSpace concatenate_spaces(auto&& factors) {
  std::vector<Subsystem> subsystems;
  for (const auto& f : factors) {
    const auto& these = f.space().factors();
    subsystems.insert(subsystems.end(), these.begin(), these.end());
  }
  return CompositeSpace(std::move(subsystems)); // rejects duplicate labels
}

} // namespace

StateVector tensor_product(std::span<const StateVector> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor product of zero factors");
  }
  Eigen::VectorXcd amp = factors[0].amplitudes();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    amp = Eigen::kroneckerProduct(amp, factors[i].amplitudes()).eval();
  }
  return StateVector(concatenate_spaces(factors), std::move(amp));
}

DensityOperator tensor_product(std::span<const DensityOperator> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor product of zero factors");
  }
  Eigen::MatrixXcd mat = factors[0].matrix();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    mat = Eigen::kroneckerProduct(mat, factors[i].matrix()).eval();
  }
  return DensityOperator(concatenate_spaces(factors), std::move(mat));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const std::array factors{a, b};
  return tensor_product(std::span<const StateVector>(factors));
}

StateVector tensor_product(const StateVector& a, const StateVector& b,
                           const StateVector& c) {
  const std::array factors{a, b, c};
  return tensor_product(std::span<const StateVector>(factors));
}

DensityOperator tensor_product(const DensityOperator& a,
                               const DensityOperator& b) {
  const std::array factors{a, b};
  return tensor_product(std::span<const DensityOperator>(factors));
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::string>& keep) {
  const CompositeSpace& space = rho.space();
  if (keep.empty()) {
    throw std::invalid_argument("partial trace must keep at least one factor");
  }

  std::vector<bool> kept(space.factor_count(), false);
  for (const auto& label : keep) {
    kept[space.index_of(label)] = true; // throws on unknown label
  }

  std::vector<std::size_t> keep_idx;
  std::vector<std::size_t> trace_idx;
  std::vector<Subsystem> kept_factors;
  for (std::size_t i = 0; i < space.factor_count(); ++i) {
    if (kept[i]) {
      keep_idx.push_back(i);
      kept_factors.push_back(space.factor(i));
    } else {
      trace_idx.push_back(i);
    }
  }

  CompositeSpace reduced(kept_factors);
  const int d_keep = reduced.total_dim();
  int d_trace = 1;
  for (auto i : trace_idx) {
    d_trace *= space.factor(i).dim;
  }

  // Map (kept digits, traced digits) back to a flat index of the full space.
  auto compose = [&](int kept_flat, int traced_flat) {
    int full = 0;
    for (std::size_t k = 0; k < keep_idx.size(); ++k) {
      full += reduced.digit(kept_flat, k) * space.stride(keep_idx[k]);
    }
    int rest = traced_flat;
    for (std::size_t k = trace_idx.size(); k-- > 0;) {
      const int dim = space.factor(trace_idx[k]).dim;
      full += (rest % dim) * space.stride(trace_idx[k]);
      rest /= dim;
    }
    return full;
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_keep, d_keep);
  for (int r = 0; r < d_keep; ++r) {
    for (int c = 0; c < d_keep; ++c) {
      std::complex<double> sum = 0.0;
      for (int t = 0; t < d_trace; ++t) {
        sum += rho.matrix()(compose(r, t), compose(c, t));
      }
      out(r, c) = sum;
    }
  }
  return DensityOperator(std::move(reduced), std::move(out));
}

SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd& hermitian,
                                             double hermiticity_tol) {
  if (hermitian.rows() != hermitian.cols()) {
    throw std::invalid_argument("spectral decomposition of nonsquare matrix");
  }
  if ((hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() >
      hermiticity_tol) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

StateVector apply_unitary(const Eigen::MatrixXcd& unitary,
                          const StateVector& psi) {
  if (unitary.rows() != psi.dim() || unitary.cols() != psi.dim()) {
    throw std::invalid_argument("operator shape does not match state");
  }
  return StateVector(psi.space(), unitary * psi.amplitudes());
}

DensityOperator apply_unitary(const Eigen::MatrixXcd& unitary,
                              const DensityOperator& rho) {
  if (unitary.rows() != rho.dim() || unitary.cols() != rho.dim()) {
    throw std::invalid_argument("operator shape does not match state");
  }
  return DensityOperator(rho.space(),
                         unitary * rho.matrix() * unitary.adjoint());
}

}  // namespace irreal
