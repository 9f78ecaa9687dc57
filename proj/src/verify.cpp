#include "irreal/verify.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "irreal/entropy.hpp"
#include "irreal/hardy.hpp"
#include "irreal/linalg.hpp"
#include "irreal/random.hpp"
#include "irreal/realism.hpp"
#include "irreal/sweep.hpp"

namespace irreal {

namespace {

using std::numbers::ln2;
using hardy::HardyConfig;
using hardy::Side;

// Closed-form stage-3 values at p = 1, frozen from direct evaluation of
// the analytic expressions (irreality also equals -ln2/2 + 3 ln3 / 4,
// nonlocality -ln2 + 3 ln3 / 4).
constexpr double kStage3IrrealityP1 = 0.47738562622110958;
constexpr double kStage3LocalIrrealityP1 = 0.19143758592503224;
constexpr double kStage3RbnP1 = 0.13081203594113699;

class Battery {
 public:
  explicit Battery(const VerifyOptions& options) : options_(options) {}

  /// passed iff |actual - expected| <= tol
  void equals(std::string name, double expected, double actual, double tol) {
    tol = options_.tolerance_override.value_or(tol);
    push({std::move(name), expected, actual,
          tol, std::abs(actual - expected) <= tol});
  }

  /// passed iff actual <= tol (actual is a nonnegative deviation)
  void max_dev(std::string name, double actual, double tol) {
    equals(std::move(name), 0.0, actual, tol);
  }

  /// passed iff actual >= floor - slack
  void at_least(std::string name, double floor, double actual, double slack) {
    slack = options_.tolerance_override.value_or(slack);
    push({std::move(name), floor, actual, slack, actual >= floor - slack});
  }

  /// Numeric-domain errors become failed checks, never crashes.
  void section(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception&) {
      push({name + "_exception", 0.0,
            std::numeric_limits<double>::quiet_NaN(), 0.0, false});
    }
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  void push(CheckResult r) { checks_.push_back(std::move(r)); }

  VerifyOptions options_;
  std::vector<CheckResult> checks_;
};

Eigen::MatrixXcd random_hermitian(RandomSource& rng, int dim) {
  const Eigen::MatrixXcd g = rng.ginibre(dim, dim);
  return ((g + g.adjoint()) / 2.0).eval();
}

CompositeSpace two_part_space(int da, int db) {
  return CompositeSpace({{"A", da}, {"B", db}});
}

double record_field_dev(const SweepRecord& a, const SweepRecord& b) {
  double dev = 0.0;
  const auto upd = [&](double x, double y) {
    dev = std::max(dev, std::abs(x - y));
  };
  upd(a.irreality_plus, b.irreality_plus);
  upd(a.irreality_minus, b.irreality_minus);
  upd(a.local_irreality_plus, b.local_irreality_plus);
  upd(a.local_irreality_minus, b.local_irreality_minus);
  upd(a.rbn, b.rbn);
  upd(a.purity, b.purity);
  upd(a.linear_entropy, b.linear_entropy);
  upd(a.p_dark, b.p_dark);
  upd(a.p_at_least_one_dark, b.p_at_least_one_dark);
  return dev;
}

std::vector<double> phi_grid() {
  std::vector<double> phis;
  for (int i = 0; i < 8; ++i) {
    phis.push_back(2.0 * std::numbers::pi * double(i) / 8.0);
  }
  return phis;
}

void qstate_checks(Battery& b, RandomSource& rng) {
  b.section("spectral_reconstruction_bound", [&] {
    double worst = 0.0;
    for (const int dim : {2, 3, 9, 18}) {
      for (int i = 0; i < 250; ++i) {
        const Eigen::MatrixXcd h = random_hermitian(rng, dim);
        const auto [evals, vecs] = spectral_decomposition(h);
        const double err =
            (h - vecs * evals.asDiagonal() * vecs.adjoint()).norm();
        worst = std::max(worst, err / std::max(1.0, h.norm()));
      }
    }
    b.max_dev("spectral_reconstruction_bound", worst, 1e-10);
  });

  b.section("reduced_entropy_agreement", [&] {
    double worst = 0.0;
    for (const auto& [da, db] : {std::pair{2, 2}, {3, 3}, {3, 2}}) {
      const CompositeSpace space = two_part_space(da, db);
      for (int i = 0; i < 100; ++i) {
        const DensityOperator rho =
            DensityOperator::pure(random_pure_state(space, rng));
        worst = std::max(
            worst,
            std::abs(von_neumann_entropy(partial_trace(rho, {"A"})) -
                     von_neumann_entropy(partial_trace(rho, {"B"}))));
      }
    }
    b.max_dev("reduced_entropy_agreement", worst, 1e-10);
  });

  b.section("partial_trace_product_identity", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const DensityOperator rho_a =
          random_density_operator(single_system("A", 3), rng);
      const DensityOperator rho_b =
          random_density_operator(single_system("B", 2), rng);
      const DensityOperator back =
          partial_trace(tensor_product(rho_a, rho_b), {"A"});
      worst = std::max(
          worst, (back.matrix() - rho_a.matrix()).cwiseAbs().maxCoeff());
    }
    b.max_dev("partial_trace_product_identity", worst, 1e-12);
  });

  b.section("entropy_unitary_invariance", [&] {
    double worst = 0.0;
    for (const int dim : {2, 3, 6}) {
      const CompositeSpace space = single_system("A", dim);
      for (int i = 0; i < 100; ++i) {
        const DensityOperator rho = random_density_operator(space, rng);
        const DensityOperator rotated =
            apply_unitary(rng.haar_unitary(dim), rho);
        worst = std::max(worst, std::abs(von_neumann_entropy(rotated) -
                                         von_neumann_entropy(rho)));
      }
    }
    b.max_dev("entropy_unitary_invariance", worst, 1e-10);
  });

  b.section("klein_inequality", [&] {
    double lowest = std::numeric_limits<double>::infinity();
    for (const int dim : {2, 3, 4}) {
      const CompositeSpace space = single_system("A", dim);
      for (int i = 0; i < 100; ++i) {
        const DensityOperator rho = random_density_operator(space, rng);
        const DensityOperator sigma = random_density_operator(space, rng);
        lowest = std::min(lowest, relative_entropy(rho, sigma));
      }
    }
    b.at_least("klein_inequality", 0.0, lowest, 1e-10);
  });
}

void framework_checks(Battery& b, RandomSource& rng) {
  const auto draw_space = [&](int i) {
    return (i % 2 == 0) ? two_part_space(2, 2) : two_part_space(3, 3);
  };

  b.section("phi_idempotence", [&] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const CompositeSpace space = draw_space(i);
      const DensityOperator rho = random_density_operator(space, rng);
      const ProjectiveObservable obs = random_observable(space, "A", rng);
      const DensityOperator once = unrevealed_measurement(rho, obs);
      const DensityOperator twice = unrevealed_measurement(once, obs);
      worst = std::max(
          worst, (twice.matrix() - once.matrix()).cwiseAbs().maxCoeff());
    }
    b.max_dev("phi_idempotence", worst, 1e-12);
  });

  b.section("metric_nonnegativity", [&] {
    double lowest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
      const CompositeSpace space = draw_space(i);
      const DensityOperator rho = random_density_operator(space, rng);
      const ProjectiveObservable obs_a = random_observable(space, "A", rng);
      const ProjectiveObservable obs_b = random_observable(space, "B", rng);
      lowest = std::min({lowest, irreality(rho, obs_a),
                         basis_discord(rho, obs_a),
                         contextual_rbn(rho, obs_a, obs_b)});
    }
    b.at_least("metric_nonnegativity", 0.0, lowest, 1e-10);
  });

  b.section("decomposition_identity", [&] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const CompositeSpace space = draw_space(i);
      const DensityOperator rho = random_density_operator(space, rng);
      const ProjectiveObservable obs = random_observable(space, "A", rng);
      worst = std::max(worst, std::abs(irreality(rho, obs) -
                                       local_irreality(rho, obs) -
                                       basis_discord(rho, obs)));
    }
    b.max_dev("decomposition_identity", worst, 1e-10);
  });

  b.section("uncertainty_gap_lower_bound", [&] {
    double lowest = std::numeric_limits<double>::infinity();
    const CompositeSpace space = two_part_space(3, 3);
    for (int i = 0; i < 1000; ++i) {
      const DensityOperator rho = random_density_operator(space, rng);
      const ProjectiveObservable first = random_observable(space, "A", rng);
      const ProjectiveObservable second = random_observable(space, "A", rng);
      lowest = std::min(lowest, irreality_uncertainty_gap(rho, first, second));
    }
    b.at_least("uncertainty_gap_lower_bound", 0.0, lowest, 1e-9);
  });

  b.section("rbn_product_states", [&] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const int da = (i % 2 == 0) ? 2 : 3;
      const int db = (i % 3 == 0) ? 2 : 3;
      const DensityOperator product = tensor_product(
          random_density_operator(single_system("A", da), rng),
          random_density_operator(single_system("B", db), rng));
      const CompositeSpace& space = product.space();
      worst = std::max(worst,
                       contextual_rbn(product,
                                      random_observable(space, "A", rng),
                                      random_observable(space, "B", rng)));
    }
    b.max_dev("rbn_product_states", worst, 1e-10);
  });

  b.section("rbn_reality_states", [&] {
    // Vanishing requires a fixed point of one of the two measurement maps
    // actually probed; definiteness in an incompatible basis is not enough
    // (that case carries the Shannon entropy instead).
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const int d = (i % 2 == 0) ? 2 : 3;
      const CompositeSpace space = two_part_space(d, d);

      if (i % 3 == 0) {
        // Classically correlated state and probes in the same bases.
        const Eigen::MatrixXcd ua = rng.haar_unitary(d);
        const Eigen::MatrixXcd ub = rng.haar_unitary(d);
        std::vector<Eigen::VectorXcd> fam_a, fam_b;
        for (int c = 0; c < d; ++c) {
          fam_a.push_back(ua.col(c));
          fam_b.push_back(ub.col(c));
        }
        const DensityOperator correlated =
            reality_state(rng.distribution(d), fam_a, fam_b);
        worst = std::max(
            worst,
            contextual_rbn(
                correlated,
                ProjectiveObservable::from_basis(correlated.space(), "A", ua),
                ProjectiveObservable::from_basis(correlated.space(), "B",
                                                 ub)));
      } else {
        // Fixed point of one of the two probed measurement maps.
        const ProjectiveObservable obs_a = random_observable(space, "A", rng);
        const ProjectiveObservable obs_b = random_observable(space, "B", rng);
        const DensityOperator state = unrevealed_measurement(
            random_density_operator(space, rng),
            (i % 3 == 1) ? obs_a : obs_b);
        worst = std::max(worst, contextual_rbn(state, obs_a, obs_b));
      }
    }
    b.max_dev("rbn_reality_states", worst, 1e-10);
  });

  b.section("phi_unitary_covariance", [&] {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const CompositeSpace space = draw_space(i);
      const int da = space.factor(0).dim;
      const int db = space.factor(1).dim;
      const DensityOperator rho = random_density_operator(space, rng);
      const ProjectiveObservable obs = random_observable(space, "A", rng);
      const Eigen::MatrixXcd local = rng.haar_unitary(da);
      const Eigen::MatrixXcd embedded = Eigen::kroneckerProduct(
          local, Eigen::MatrixXcd::Identity(db, db));

      std::vector<Eigen::MatrixXcd> rotated;
      for (const auto& p : obs.projectors()) {
        rotated.push_back(local * p * local.adjoint());
      }
      const ProjectiveObservable rotated_obs(space, "A", rotated);

      const DensityOperator lhs = unrevealed_measurement(
          apply_unitary(embedded, rho), rotated_obs);
      const DensityOperator rhs =
          apply_unitary(embedded, unrevealed_measurement(rho, obs));
      worst = std::max(worst,
                       (lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff());
    }
    b.max_dev("phi_unitary_covariance", worst, 1e-10);
  });
}

void shannon_remark_check(Battery& b, RandomSource& rng) {
  b.section("reality_state_shannon_match", [&] {
    Eigen::MatrixXcd fourier(2, 2);
    fourier << 1.0, 1.0, 1.0, -1.0;
    fourier /= std::numbers::sqrt2;

    const Eigen::VectorXcd e0 = Eigen::Vector2cd(1.0, 0.0);
    const Eigen::VectorXcd e1 = Eigen::Vector2cd(0.0, 1.0);

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const ClassicalDistribution dist = rng.distribution(2);
      const DensityOperator state = reality_state(dist, {e0, e1}, {e0, e1});
      const ProjectiveObservable obs_a =
          ProjectiveObservable::from_basis(state.space(), "A", fourier);
      const ProjectiveObservable obs_b =
          ProjectiveObservable::from_basis(state.space(), "B", fourier);
      worst = std::max(worst, std::abs(contextual_rbn(state, obs_a, obs_b) -
                                       shannon_entropy(dist)));
    }
    b.max_dev("reality_state_shannon_match", worst, 1e-9);
  });
}

void optics_checks(Battery& b) {
  b.section("optical_element_unitarity", [&] {
    const int d = hardy::full_space().total_dim();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    const auto defect = [&](const Eigen::MatrixXcd& u) {
      return (u * u.adjoint() - id).cwiseAbs().maxCoeff();
    };
    double worst = std::max(
        {defect(hardy::beam_splitter(Side::plus)),
         defect(hardy::beam_splitter(Side::minus)),
         defect(hardy::mirror(Side::plus)),
         defect(hardy::mirror(Side::minus))});
    for (const double p : sweep_grid(0.0, 1.0, 21)) {
      for (const double phi : phi_grid()) {
        worst = std::max(worst, defect(hardy::annihilation({p, phi})));
      }
    }
    b.max_dev("optical_element_unitarity", worst, 1e-12);
  });

  b.section("stage_state_normalization", [&] {
    double worst = 0.0;
    for (const double p : sweep_grid(0.0, 1.0, 21)) {
      for (const double phi : phi_grid()) {
        for (int stage = 1; stage <= 4; ++stage) {
          const StateVector psi = hardy::stage_state(stage, {p, phi});
          worst = std::max(worst,
                           std::abs(psi.amplitudes().squaredNorm() - 1.0));
        }
      }
    }
    b.max_dev("stage_state_normalization", worst, 1e-12);
  });
}

void stage_metric_checks(Battery& b) {
  b.section("stage1_metrics_zero", [&] {
    const hardy::StageReport r = hardy::stage_report(1, HardyConfig(0.7));
    b.max_dev("stage1_metrics_zero",
              std::max({std::abs(r.irreality_plus),
                        std::abs(r.irreality_minus),
                        std::abs(r.local_irreality_plus),
                        std::abs(r.local_irreality_minus), std::abs(r.rbn)}),
              1e-12);
  });

  b.section("stage2_metrics", [&] {
    const hardy::StageReport r = hardy::stage_report(2, HardyConfig(0.5));
    b.max_dev("stage2_irreality_ln2",
              std::max({std::abs(r.irreality_plus - ln2),
                        std::abs(r.irreality_minus - ln2),
                        std::abs(r.local_irreality_plus - ln2),
                        std::abs(r.local_irreality_minus - ln2)}),
              1e-10);
    b.max_dev("stage2_rbn_zero", std::abs(r.rbn), 1e-10);
  });

  b.section("stage3_endpoints", [&] {
    const hardy::StageReport r0 = hardy::stage_report(3, HardyConfig(0.0));
    b.max_dev("stage3_endpoint_p0",
              std::max({std::abs(r0.irreality_plus - ln2),
                        std::abs(r0.local_irreality_plus - ln2),
                        std::abs(r0.rbn)}),
              1e-5);
    const hardy::StageReport r1 = hardy::stage_report(3, HardyConfig(1.0));
    b.max_dev("stage3_endpoint_p1",
              std::max({std::abs(r1.irreality_plus - kStage3IrrealityP1),
                        std::abs(r1.local_irreality_plus -
                                 kStage3LocalIrrealityP1),
                        std::abs(r1.rbn - kStage3RbnP1)}),
              1e-5);
  });
}

void stage3_analytic_checks(Battery& b) {
  b.section("stage3_analytic_match", [&] {
    double dev_irr = 0.0;
    double dev_local = 0.0;
    double dev_rbn = 0.0;
    double dev_sym = 0.0;
    double min_ordering = std::numeric_limits<double>::infinity();
    double min_rbn_step = std::numeric_limits<double>::infinity();
    double previous_rbn = 0.0;

    const std::vector<double> grid = sweep_grid(0.0, 1.0, 21);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double p = grid[i];
      const hardy::StageReport r = hardy::stage_report(3, HardyConfig(p));
      dev_irr = std::max(
          dev_irr,
          std::abs(r.irreality_plus - hardy::stage3_irreality_analytic(p)));
      dev_local = std::max(
          dev_local, std::abs(r.local_irreality_plus -
                              hardy::stage3_local_irreality_analytic(p)));
      dev_rbn =
          std::max(dev_rbn, std::abs(r.rbn - hardy::stage3_rbn_analytic(p)));
      dev_sym = std::max(
          {dev_sym, std::abs(r.irreality_plus - r.irreality_minus),
           std::abs(r.local_irreality_plus - r.local_irreality_minus)});
      min_ordering = std::min({min_ordering,
                               r.irreality_plus - r.local_irreality_plus,
                               r.irreality_minus - r.local_irreality_minus});
      if (i > 0) {
        min_rbn_step = std::min(min_rbn_step, r.rbn - previous_rbn);
      }
      previous_rbn = r.rbn;
    }
    b.max_dev("stage3_irreality_analytic_match", dev_irr, 1e-9);
    b.max_dev("stage3_local_irreality_analytic_match", dev_local, 1e-9);
    b.max_dev("stage3_rbn_analytic_match", dev_rbn, 1e-9);
    b.max_dev("plus_minus_symmetry", dev_sym, 1e-10);
    b.at_least("stage3_irreality_ordering", 0.0, min_ordering, 1e-10);
    b.at_least("stage3_rbn_monotone", 0.0, min_rbn_step, 1e-12);
  });
}

void purity_checks(Battery& b) {
  b.section("matter_purity", [&] {
    double dev_formula = 0.0;
    double dev_stage4 = 0.0;
    for (const double p : sweep_grid(0.0, 1.0, 21)) {
      const hardy::StageReport r3 = hardy::stage_report(3, HardyConfig(p));
      const hardy::StageReport r4 = hardy::stage_report(4, HardyConfig(p));
      const hardy::PurityEntanglement expect = hardy::matter_purity_analytic(p);
      dev_formula = std::max(
          {dev_formula, std::abs(r3.matter_purity - expect.purity),
           std::abs(r3.matter_linear_entropy - expect.entanglement)});
      dev_stage4 =
          std::max(dev_stage4, std::abs(r4.matter_purity - r3.matter_purity));
    }
    b.max_dev("matter_purity_analytic_match", dev_formula, 1e-10);
    b.max_dev("stage4_purity_equals_stage3", dev_stage4, 1e-10);
  });
}

void detection_checks(Battery& b) {
  b.section("detection", [&] {
    const hardy::DetectionDistribution hardy_case =
        hardy::detection_distribution(HardyConfig(1.0));
    b.max_dev("detection_p1_statistics",
              std::max(std::abs(hardy_case.dark_both() - 1.0 / 16.0),
                       std::abs(hardy_case.at_least_one_dark() - 3.0 / 16.0)),
              1e-12);

    double dev_dark = 0.0;
    double dev_sum = 0.0;
    for (const double p : sweep_grid(0.0, 1.0, 21)) {
      for (const double phi : phi_grid()) {
        const hardy::DetectionDistribution dist =
            hardy::detection_distribution({p, phi});
        dev_dark = std::max(
            dev_dark, std::abs(dist.dark_both() - hardy::dark_probability(p)));
        dev_sum = std::max(dev_sum, std::abs(dist.sum() - 1.0));
      }
    }
    b.max_dev("dark_probability_match", dev_dark, 1e-12);
    b.max_dev("detection_normalization", dev_sum, 1e-10);
  });
}

void stage4_checks(Battery& b) {
  b.section("stage4_asymptotics", [&] {
    const double p = 1e-3;
    const hardy::StageReport r = hardy::stage_report(4, HardyConfig(p));
    const hardy::Stage4Asymptotics asymp = hardy::stage4_asymptotics(p);
    b.max_dev("stage4_asymptotic_ratio",
              std::max({std::abs(r.irreality_plus / asymp.irreality - 1.0),
                        std::abs(r.local_irreality_plus /
                                     asymp.local_irreality - 1.0),
                        std::abs(r.rbn / asymp.rbn - 1.0)}),
              0.05);

    const hardy::StageReport tiny = hardy::stage_report(4, HardyConfig(1e-7));
    b.max_dev("stage4_vanishing_near_zero",
              std::max({tiny.irreality_plus, tiny.local_irreality_plus,
                        tiny.rbn}),
              1e-12);

    double min_rbn = std::numeric_limits<double>::infinity();
    double min_gap = std::numeric_limits<double>::infinity();
    for (const double pg : sweep_grid(0.0, 1.0, 21)) {
      const hardy::StageReport rg = hardy::stage_report(4, HardyConfig(pg));
      if (pg > 0.0) {
        min_rbn = std::min(min_rbn, rg.rbn);
      }
      min_gap = std::min({min_gap,
                          rg.irreality_plus - rg.local_irreality_plus,
                          rg.irreality_minus - rg.local_irreality_minus});
    }
    b.at_least("stage4_rbn_positive", 1e-10, min_rbn, 0.0);
    b.at_least("stage4_irreality_ordering", 0.0, min_gap, 1e-10);

    const hardy::StageReport at_zero = hardy::stage_report(4, HardyConfig(0.0));
    b.max_dev("stage4_rbn_zero_at_p0", std::abs(at_zero.rbn), 1e-10);
  });
}

void phase_invariance_check(Battery& b) {
  b.section("phase_invariance", [&] {
    double worst = 0.0;
    for (int stage = 1; stage <= 4; ++stage) {
      worst = std::max(worst,
                       record_field_dev(make_record(stage, {0.6, 0.0}),
                                        make_record(stage, {0.6, 2.1})));
    }
    const hardy::DetectionDistribution ref =
        hardy::detection_distribution({0.6, 0.0});
    const hardy::DetectionDistribution alt =
        hardy::detection_distribution({0.6, 2.1});
    worst = std::max({worst, std::abs(ref.xplus_xminus - alt.xplus_xminus),
                      std::abs(ref.xplus_yminus - alt.xplus_yminus),
                      std::abs(ref.yplus_xminus - alt.yplus_xminus),
                      std::abs(ref.yplus_yminus - alt.yplus_yminus),
                      std::abs(ref.annihilation - alt.annihilation)});
    b.max_dev("phase_invariance", worst, 1e-12);
  });
}

} // namespace

const CheckResult* VerifyReport::find(const std::string& name) const {
  const auto it = std::find_if(
      checks.begin(), checks.end(),
      [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  Battery battery(options);
  RandomSource rng(options.seed);

  qstate_checks(battery, rng);
  framework_checks(battery, rng);
  shannon_remark_check(battery, rng);
  optics_checks(battery);
  stage_metric_checks(battery);
  stage3_analytic_checks(battery);
  purity_checks(battery);
  detection_checks(battery);
  stage4_checks(battery);
  phase_invariance_check(battery);

  VerifyReport report;
  report.checks = battery.take();
  report.all_passed =
      std::all_of(report.checks.begin(), report.checks.end(),
                  [](const CheckResult& c) { return c.passed; });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-42s %13s %13s %9s %s", "check",
                "expected", "actual", "tol", "status");
  out << line << '\n' << std::string(88, '-') << '\n';
  int passed = 0;
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof(line), "%-42s %13.6g %13.6g %9.3g %s",
                  c.name.c_str(), c.expected, c.actual, c.tolerance,
                  c.passed ? "PASS" : "FAIL");
    out << line << '\n';
    passed += c.passed ? 1 : 0;
  }
  std::snprintf(line, sizeof(line), "overall: %s (%d/%zu checks) in %.2f s",
                report.all_passed ? "PASS" : "FAIL", passed,
                report.checks.size(), report.seconds);
  out << line << '\n';
}

const std::vector<CriterionSpec>& acceptance_criteria() {
  static const std::vector<CriterionSpec> criteria = {
      {1, "stage-1 metrics all vanish", {"stage1_metrics_zero"}},
      {2,
       "stage-2 path irrealities equal ln 2 with zero nonlocality",
       {"stage2_irreality_ln2", "stage2_rbn_zero"}},
      {3,
       "stage-3 numerics match the closed forms on the p grid",
       {"stage3_irreality_analytic_match",
        "stage3_local_irreality_analytic_match", "stage3_rbn_analytic_match"}},
      {4,
       "stage-3 endpoint values",
       {"stage3_endpoint_p0", "stage3_endpoint_p1"}},
      {5,
       "matter purity and entanglement",
       {"matter_purity_analytic_match", "stage4_purity_equals_stage3"}},
      {6,
       "detection statistics",
       {"detection_p1_statistics", "dark_probability_match",
        "detection_normalization"}},
      {7,
       "stage-4 asymptotics and qualitative shape",
       {"stage4_asymptotic_ratio", "stage4_vanishing_near_zero",
        "stage4_rbn_positive", "stage4_irreality_ordering"}},
      {8,
       "framework property suite on random states and observables",
       {"phi_idempotence", "metric_nonnegativity", "decomposition_identity",
        "uncertainty_gap_lower_bound", "rbn_product_states",
        "rbn_reality_states"}},
      {9, "classically correlated states expose the Shannon entropy",
       {"reality_state_shannon_match"}},
      {10, "interaction phase never reaches an exported number",
       {"phase_invariance"}},
  };
  return criteria;
}

}  // namespace irreal
