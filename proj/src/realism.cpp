#include "irreal/realism.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "irreal/linalg.hpp"

namespace irreal {

namespace {

double clamp_metric(double value, double clamp, const char* what) {
  if (value < -clamp) {
    throw std::domain_error(std::string(what) +
                            " is negative beyond float noise: " +
                            std::to_string(value));
  }
  return value < 0.0 ? 0.0 : value;
}

// Observable restricted to its own subsystem, for reduced-state metrics.
ProjectiveObservable reduced_observable(const ProjectiveObservable& obs) {
  return ProjectiveObservable(
      single_system(obs.subsystem(), obs.subsystem_dim()), obs.subsystem(),
      obs.projectors());
}

// 1_A/d_A x rho_rest with the factor left at A's original position.
DensityOperator maximally_mixed_at(const DensityOperator& rho,
                                   const std::string& subsystem) {
  const CompositeSpace& space = rho.space();
  const std::size_t a = space.index_of(subsystem);
  const int d_a = space.factor(a).dim;

  std::vector<std::string> rest;
  for (std::size_t i = 0; i < space.factor_count(); ++i) {
    if (i != a) {
      rest.push_back(space.factor(i).label);
    }
  }
  if (rest.empty()) {
    return DensityOperator::maximally_mixed(space);
  }
  const DensityOperator rho_rest = partial_trace(rho, rest);
  const CompositeSpace& rest_space = rho_rest.space();

  // sigma[r,c] = delta(r_A, c_A) rho_rest[r', c'] / d_A
  auto rest_index = [&](int flat) {
    int idx = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < space.factor_count(); ++i) {
      if (i == a) {
        continue;
      }
      idx += space.digit(flat, i) * rest_space.stride(k);
      ++k;
    }
    return idx;
  };

  const int d = space.total_dim();
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      if (space.digit(r, a) != space.digit(c, a)) {
        continue;
      }
      sigma(r, c) = rho_rest.matrix()(rest_index(r), rest_index(c)) / double(d_a);
    }
  }
  return DensityOperator(space, std::move(sigma));
}

} // namespace

DensityOperator unrevealed_measurement(const DensityOperator& rho,
                                       const ProjectiveObservable& obs) {
  if (!(obs.space() == rho.space())) {
    throw std::invalid_argument(
        "observable and state live on different spaces");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  for (std::size_t a = 0; a < obs.outcome_count(); ++a) {
    const Eigen::MatrixXcd e = obs.embedded_projector(a);
    out += e * rho.matrix() * e;
  }
  return DensityOperator(rho.space(), std::move(out));
}

bool is_reality_state(const DensityOperator& rho,
                      const ProjectiveObservable& obs, double tol) {
  if (tol <= 0.0) {
    throw std::invalid_argument("reality-state tolerance must be positive");
  }
  const DensityOperator projected = unrevealed_measurement(rho, obs);
  return (projected.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= tol;
}

double irreality(const DensityOperator& rho, const ProjectiveObservable& obs,
                 double metric_clamp) {
  const double s = von_neumann_entropy(unrevealed_measurement(rho, obs)) -
                   von_neumann_entropy(rho);
  return clamp_metric(s, metric_clamp, "irreality");
}

double local_irreality(const DensityOperator& rho,
                       const ProjectiveObservable& obs, double metric_clamp) {
  if (!(obs.space() == rho.space())) {
    throw std::invalid_argument(
        "observable and state live on different spaces");
  }
  const DensityOperator reduced = partial_trace(rho, {obs.subsystem()});
  return irreality(reduced, reduced_observable(obs), metric_clamp);
}

double basis_discord(const DensityOperator& rho,
                     const ProjectiveObservable& obs, double metric_clamp) {
  const double d = irreality(rho, obs, metric_clamp) -
                   local_irreality(rho, obs, metric_clamp);
  return clamp_metric(d, metric_clamp, "basis discord");
}

double contextual_rbn(const DensityOperator& rho,
                      const ProjectiveObservable& obs_a,
                      const ProjectiveObservable& obs_b,
                      double metric_clamp) {
  if (obs_a.subsystem() == obs_b.subsystem()) {
    throw std::invalid_argument(
        "realism-based nonlocality needs observables on distinct subsystems");
  }
  const double n = irreality(rho, obs_a, metric_clamp) -
                   irreality(unrevealed_measurement(rho, obs_b), obs_a,
                             metric_clamp);
  return clamp_metric(n, metric_clamp, "realism-based nonlocality");
}

double irreality_uncertainty_gap(const DensityOperator& rho,
                                 const ProjectiveObservable& obs_a,
                                 const ProjectiveObservable& obs_a2) {
  if (obs_a.subsystem() != obs_a2.subsystem()) {
    throw std::invalid_argument(
        "uncertainty gap needs two observables on the same subsystem");
  }
  const DensityOperator reference =
      maximally_mixed_at(rho, obs_a.subsystem());
  const double bound = relative_entropy(rho, reference);
  if (std::isinf(bound)) {
    throw std::domain_error(
        "relative entropy diverged against a full-support reference");
  }
  return irreality(rho, obs_a) + irreality(rho, obs_a2) - bound;
}

DensityOperator reality_state(const ClassicalDistribution& dist,
                              const std::vector<Eigen::VectorXcd>& basis_a,
                              const std::vector<Eigen::VectorXcd>& basis_b,
                              std::string label_a, std::string label_b) {
  const auto check_family = [](const std::vector<Eigen::VectorXcd>& family,
                               const char* name) {
    if (family.empty()) {
      throw std::invalid_argument(std::string(name) + " family is empty");
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].size() != family[0].size()) {
        throw std::invalid_argument(std::string(name) +
                                    " family has mixed dimensions");
      }
      for (std::size_t j = 0; j <= i; ++j) {
        const std::complex<double> overlap = family[j].dot(family[i]);
        const double target = (i == j) ? 1.0 : 0.0;
        if (std::abs(overlap - target) > tol::kProjector) {
          throw std::invalid_argument(std::string(name) +
                                      " family is not orthonormal");
        }
      }
    }
  };
  check_family(basis_a, "first");
  check_family(basis_b, "second");
  if (static_cast<int>(basis_a.size()) < dist.size() ||
      static_cast<int>(basis_b.size()) < dist.size()) {
    throw std::invalid_argument(
        "basis families shorter than the distribution");
  }

  const int d_a = static_cast<int>(basis_a[0].size());
  const int d_b = static_cast<int>(basis_b[0].size());
  CompositeSpace space({{std::move(label_a), d_a}, {std::move(label_b), d_b}});

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_a * d_b, d_a * d_b);
  for (int k = 0; k < dist.size(); ++k) {
    const Eigen::MatrixXcd pa = basis_a[k] * basis_a[k].adjoint();
    const Eigen::MatrixXcd pb = basis_b[k] * basis_b[k].adjoint();
    Eigen::MatrixXcd term(d_a * d_b, d_a * d_b);
    for (int i = 0; i < d_a; ++i) {
      for (int j = 0; j < d_a; ++j) {
        term.block(i * d_b, j * d_b, d_b, d_b) = pa(i, j) * pb;
      }
    }
    out += dist.probabilities()(k) * term;
  }
  return DensityOperator(std::move(space), std::move(out));
}

}  // namespace irreal
