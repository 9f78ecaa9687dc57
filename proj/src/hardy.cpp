#include "irreal/hardy.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "irreal/entropy.hpp"
#include "irreal/linalg.hpp"
#include "irreal/realism.hpp"

namespace irreal::hardy {

namespace {

using std::numbers::ln2;

constexpr std::complex<double> kI{0.0, 1.0};

// x ln x with the continuous extension 0 at x <= 0 (float noise at the
// removable singularities lands marginally below zero).
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_unit_interval(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " requires p in [0,1]");
  }
}

Eigen::Matrix3cd beam_splitter_local() {
  Eigen::Matrix3cd b = Eigen::Matrix3cd::Zero();
  const double s = 1.0 / std::numbers::sqrt2;
  b(kPathX, kPathX) = s;
  b(kPathY, kPathX) = kI * s;
  b(kPathX, kPathY) = kI * s;
  b(kPathY, kPathY) = s;
  b(kAbsent, kAbsent) = 1.0; // absent particles meet no optics
  return b;
}

Eigen::Matrix3cd mirror_local() {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(kPathY, kPathX) = kI;
  m(kPathX, kPathY) = kI;
  m(kAbsent, kAbsent) = 1.0;
  return m;
}

Eigen::MatrixXcd embed_particle(const Eigen::Matrix3cd& local, Side side) {
  const Eigen::Matrix3cd id3 = Eigen::Matrix3cd::Identity();
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix3cd& plus = (side == Side::plus) ? local : id3;
  const Eigen::Matrix3cd& minus = (side == Side::plus) ? id3 : local;
  return Eigen::kroneckerProduct(Eigen::kroneckerProduct(plus, minus).eval(),
                                 id2);
}

int overlap_index() {
  return full_space().ravel({kPathX, kPathY, kNoPhotons});
}

int annihilated_index() {
  return full_space().ravel({kAbsent, kAbsent, kPhotonPair});
}

} // namespace

const CompositeSpace& full_space() {
  static const CompositeSpace space({{"+", 3}, {"-", 3}, {"gamma", 2}});
  return space;
}

const CompositeSpace& matter_space() {
  static const CompositeSpace space({{"+", 3}, {"-", 3}});
  return space;
}

HardyConfig::HardyConfig(double p_in, double phi_in) : p(p_in), phi(phi_in) {
  require_unit_interval(p, "HardyConfig");
  const double tau = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, tau);
  if (phi < 0.0) {
    phi += tau;
  }
}

double HardyConfig::alpha() const { return std::sqrt(1.0 - p); }

std::complex<double> HardyConfig::beta() const {
  return std::sqrt(p) * std::exp(kI * phi);
}

Eigen::MatrixXcd beam_splitter(Side side) {
  return embed_particle(beam_splitter_local(), side);
}

Eigen::MatrixXcd mirror(Side side) {
  return embed_particle(mirror_local(), side);
}

Eigen::MatrixXcd annihilation(const HardyConfig& config) {
  const int d = full_space().total_dim();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  const int meet = overlap_index();
  const int gone = annihilated_index();
  u(meet, meet) = config.alpha();
  u(gone, meet) = config.beta();
  u(meet, gone) = -std::conj(config.beta());
  u(gone, gone) = config.alpha();
  return u;
}

StateVector stage_state(int stage, const HardyConfig& config) {
  if (stage < 1 || stage > 4) {
    throw std::invalid_argument("stage must be in 1..4");
  }
  StateVector psi = basis_state(full_space(), {kPathY, kPathX, kNoPhotons});
  if (stage >= 2) {
    psi = apply_unitary(beam_splitter(Side::plus),
                        apply_unitary(beam_splitter(Side::minus), psi));
  }
  if (stage >= 3) {
    psi = apply_unitary(annihilation(config), psi);
  }
  if (stage == 4) {
    psi = apply_unitary(mirror(Side::plus),
                        apply_unitary(mirror(Side::minus), psi));
    psi = apply_unitary(beam_splitter(Side::plus),
                        apply_unitary(beam_splitter(Side::minus), psi));
  }
  return psi;
}

ProjectiveObservable path_observable(Side side) {
  return ProjectiveObservable::computational(
      matter_space(), side == Side::plus ? "+" : "-");
}

StageReport stage_report(int stage, const HardyConfig& config) {
  StateVector psi = stage_state(stage, config);
  DensityOperator matter =
      partial_trace(DensityOperator::pure(psi), {"+", "-"});

  const ProjectiveObservable path_plus = path_observable(Side::plus);
  const ProjectiveObservable path_minus = path_observable(Side::minus);

  StageReport report{
      .stage = stage,
      .state = std::move(psi),
      .matter = std::move(matter),
      .irreality_plus = 0.0,
      .irreality_minus = 0.0,
      .local_irreality_plus = 0.0,
      .local_irreality_minus = 0.0,
      .rbn = 0.0,
      .matter_purity = 0.0,
      .matter_linear_entropy = 0.0,
  };
  report.irreality_plus = irreality(report.matter, path_plus);
  report.irreality_minus = irreality(report.matter, path_minus);
  report.local_irreality_plus = local_irreality(report.matter, path_plus);
  report.local_irreality_minus = local_irreality(report.matter, path_minus);
  report.rbn = contextual_rbn(report.matter, path_plus, path_minus);
  report.matter_purity = purity(report.matter);
  report.matter_linear_entropy = 1.0 - report.matter_purity;
  return report;
}

double stage3_irreality_analytic(double p) {
  require_unit_interval(p, "stage3_irreality_analytic");
  double sum = 0.0;
  for (int k = 1; k <= 2; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * xlogx(std::pow(2.0, k) - p);
  }
  return -0.5 * ln2 + 0.25 * sum;
}

double stage3_local_irreality_analytic(double p) {
  require_unit_interval(p, "stage3_local_irreality_analytic");
  const double radicand = 8.0 * (1.0 + std::sqrt(1.0 - p)) + p * (p - 4.0);
  if (radicand < 0.0) {
    throw std::domain_error("negative radicand in the local-irreality kernel");
  }
  const double root = std::sqrt(radicand);

  auto f = [&](int j, int k) {
    const double parity = (1.0 + ((k % 2 == 0) ? 1.0 : -1.0)) / 2.0;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return std::pow(2.0, k) - p + sign * parity * root;
  };

  double sum = 0.0;
  for (int k = 1; k <= 2; ++k) {
    const double weight = 3.0 * ((k % 2 == 0) ? -1.0 : 1.0) + 1.0;
    for (int j = 1; j <= k; ++j) {
      sum += weight * xlogx(f(j, k));
    }
  }
  return -((6.0 - p) / 4.0) * ln2 - sum / 16.0;
}

double stage3_rbn_analytic(double p) {
  require_unit_interval(p, "stage3_rbn_analytic");
  double sum = 0.0;
  for (int k = 0; k <= 2; ++k) {
    const double weight = 3.0 * ((k % 2 == 0) ? 1.0 : -1.0) - 1.0;
    sum += weight * xlogx(std::pow(2.0, k) - p);
  }
  return -ln2 + sum / 8.0;
}

PurityEntanglement matter_purity_analytic(double p) {
  require_unit_interval(p, "matter_purity_analytic");
  return {
      .purity = (8.0 - 4.0 * p + p * p) / 8.0,
      .entanglement = (p / 2.0) * (1.0 - p / 4.0),
  };
}

Stage4Asymptotics stage4_asymptotics(double p) {
  if (!(p > 0.0)) {
    throw std::invalid_argument(
        "stage4_asymptotics requires p > 0 (logarithmic divergence)");
  }
  const double p2 = p * p;
  const double lp2 = std::log(p2);
  return {
      .irreality = (1.0 + std::log(32.0) - lp2) * p2 / 32.0,
      .local_irreality = (1.0 + std::log(16.0) - lp2) * p2 / 64.0,
      .rbn = (1.0 + std::log(4.0) - lp2) * p2 / 64.0,
  };
}

DetectionDistribution detection_distribution(const HardyConfig& config) {
  const StateVector psi = stage_state(4, config);
  const CompositeSpace& space = full_space();
  auto prob_at = [&](int plus, int minus, int photon) {
    return std::norm(psi.amplitudes()(space.ravel({plus, minus, photon})));
  };
  return {
      .xplus_xminus = prob_at(kPathX, kPathX, kNoPhotons),
      .xplus_yminus = prob_at(kPathX, kPathY, kNoPhotons),
      .yplus_xminus = prob_at(kPathY, kPathX, kNoPhotons),
      .yplus_yminus = prob_at(kPathY, kPathY, kNoPhotons),
      .annihilation = prob_at(kAbsent, kAbsent, kPhotonPair),
  };
}

double dark_probability(double p) {
  require_unit_interval(p, "dark_probability");
  const double amplitude = 1.0 - std::sqrt(1.0 - p);
  return amplitude * amplitude / 16.0;
}

}  // namespace irreal::hardy
