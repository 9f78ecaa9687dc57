#pragma once

#include <Eigen/Dense>
#include <complex>

#include "irreal/observable.hpp"
#include "irreal/state.hpp"

namespace irreal::hardy {

// Two overlapped Mach-Zehnder interferometers with an annihilation channel:
// positron and electron each live on a 3-dim space (two path directions plus
// an absent-particle level), the radiation on a 2-dim space (no photons /
// photon pair), 18 dimensions in total. The three-level structure lets the
// pair-annihilation step be a genuine unitary on the full space.

enum class Side { plus, minus };

// Basis order of each particle factor and of the photon factor.
inline constexpr int kPathX = 0;
inline constexpr int kPathY = 1;
inline constexpr int kAbsent = 2;
inline constexpr int kNoPhotons = 0;
inline constexpr int kPhotonPair = 1;

/// (+, 3) x (-, 3) x (gamma, 2)
const CompositeSpace& full_space();
/// (+, 3) x (-, 3)
const CompositeSpace& matter_space();

/// Annihilation probability p in [0,1] and interaction phase phi,
/// normalized into [0, 2*pi). The branch amplitudes are alpha = sqrt(1-p)
/// and beta = sqrt(p) e^{i phi}.
struct HardyConfig {
  HardyConfig(double p, double phi = 0.0);

  double p = 0.0;
  double phi = 0.0;

  double alpha() const;
  std::complex<double> beta() const;
};

/// |x> -> (|x> + i|y>)/sqrt2, |y> -> (|y> + i|x>)/sqrt2 on the chosen
/// particle; identity on the absent level and on the other factors.
Eigen::MatrixXcd beam_splitter(Side side);

/// |x> -> i|y>, |y> -> i|x> on the chosen particle; identity elsewhere.
Eigen::MatrixXcd mirror(Side side);

/// Two-level rotation between |x>+|y>-|0>gamma and |0>+|0>-|2>gamma:
///   |x,y,0>  ->  alpha |x,y,0> + beta |0,0,2>
///   |0,0,2>  -> -conj(beta) |x,y,0> + alpha |0,0,2>
/// and identity on the 16-dim orthogonal complement.
Eigen::MatrixXcd annihilation(const HardyConfig& config);

/// Global state in region k of the apparatus: 1 before the first
/// beam-splitters, 2 after them, 3 after the overlap point, 4 after the
/// final beam-splitters. Stages 2-4 are built by applying the element
/// unitaries in order, never by transcribing amplitudes.
StateVector stage_state(int stage, const HardyConfig& config);

/// Path observable {|x><x|, |y><y|, |0><0|} of one particle, acting on the
/// 9-dim matter space.
ProjectiveObservable path_observable(Side side);

struct StageReport {
  int stage;
  StateVector state;      // 18-dim global state
  DensityOperator matter; // 9-dim positron-electron reduced state
  double irreality_plus;
  double irreality_minus;
  double local_irreality_plus;
  double local_irreality_minus;
  double rbn;
  double matter_purity;
  double matter_linear_entropy;
};

/// Path-realism metrics of the matter state at one stage.
StageReport stage_report(int stage, const HardyConfig& config);

/// Closed form for the stage-3 path irreality:
///   -ln(sqrt 2) + (1/4) sum_{k=1}^{2} (-1)^k (2^k - p) ln(2^k - p).
double stage3_irreality_analytic(double p);

/// Closed form for the stage-3 local path irreality, built on the kernel
///   f_{jk}(p) = 2^k - p + (-1)^j [(1+(-1)^k)/2] sqrt(8(1+sqrt(1-p)) + p(p-4)),
/// with f ln f := 0 at f = 0.
double stage3_local_irreality_analytic(double p);

/// Closed form for the stage-3 realism-based nonlocality:
///   -ln 2 + (1/8) sum_{k=0}^{2} [3(-1)^k - 1] (2^k - p) ln(2^k - p).
double stage3_rbn_analytic(double p);

struct PurityEntanglement {
  double purity;       // (8 - 4p + p^2)/8
  double entanglement; // linear entropy (p/2)(1 - p/4)
};

/// Closed forms for the stage-3 (and stage-4) matter purity and its
/// matter-radiation entanglement measured by linear entropy.
PurityEntanglement matter_purity_analytic(double p);

struct Stage4Asymptotics {
  double irreality;       // (1 + ln 32 - ln p^2) p^2/32
  double local_irreality; // (1 + ln 16 - ln p^2) p^2/64
  double rbn;             // (1 + ln 4  - ln p^2) p^2/64
};

/// Leading-order small-p behavior of the stage-4 metrics. Requires p > 0.
Stage4Asymptotics stage4_asymptotics(double p);

/// Probabilities of the five mutually exclusive final outcomes. X+ and Y-
/// are the dark detectors: with isolated interferometers (p = 0) the
/// calibration sends the pair to (Y+, X-) with certainty.
struct DetectionDistribution {
  double xplus_xminus;
  double xplus_yminus; // both dark detectors click
  double yplus_xminus;
  double yplus_yminus;
  double annihilation;

  double dark_both() const { return xplus_yminus; }
  double at_least_one_dark() const {
    return xplus_xminus + xplus_yminus + yplus_yminus;
  }
  double sum() const {
    return xplus_xminus + xplus_yminus + yplus_xminus + yplus_yminus +
           annihilation;
  }
};

DetectionDistribution detection_distribution(const HardyConfig& config);

/// (1 - sqrt(1-p))^2 / 16, the probability that both dark detectors click;
/// at-least-one-dark is three times this.
double dark_probability(double p);

}  // namespace irreal::hardy
