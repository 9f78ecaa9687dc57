#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numbers>

#include "irreal/entropy.hpp"
#include "irreal/hardy.hpp"
#include "irreal/linalg.hpp"
#include "irreal/realism.hpp"
#include "test_support.hpp"

using namespace irreal;
using namespace irreal::hardy;
using std::numbers::ln2;
using std::numbers::sqrt2;
using testsup::kI;

namespace {

// Stage-3 closed forms evaluated at p = 1 (the irreality also equals
// -ln2/2 + 3 ln3/4 and the nonlocality -ln2 + 3 ln3/4).
constexpr double kIrrealityP1 = 0.47738562622110958;
constexpr double kLocalIrrealityP1 = 0.19143758592503224;
constexpr double kRbnP1 = 0.13081203594113699;

std::vector<double> grid(int steps) {
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) {
    g[i] = double(i) / double(steps - 1);
  }
  return g;
}

Eigen::VectorXcd paper_psi3(const HardyConfig& config) {
  const CompositeSpace& space = full_space();
  Eigen::Vector3cd phi_plus(kI / sqrt2, 1.0 / sqrt2, 0.0);
  Eigen::Vector3cd phi_minus(1.0 / sqrt2, kI / sqrt2, 0.0);
  Eigen::Vector2cd no_photons(1.0, 0.0);
  Eigen::VectorXcd psi =
      Eigen::kroneckerProduct(
          Eigen::kroneckerProduct(phi_plus, phi_minus).eval(), no_photons)
          .eval();
  psi(space.ravel({kPathX, kPathY, kNoPhotons})) +=
      (1.0 - config.alpha()) / 2.0;
  psi(space.ravel({kAbsent, kAbsent, kPhotonPair})) += -config.beta() / 2.0;
  return psi;
}

Eigen::VectorXcd paper_psi4(const HardyConfig& config) {
  const CompositeSpace& space = full_space();
  Eigen::Vector3cd phi_plus(kI / sqrt2, 1.0 / sqrt2, 0.0);
  Eigen::Vector3cd phi_minus(1.0 / sqrt2, kI / sqrt2, 0.0);
  Eigen::Vector2cd no_photons(1.0, 0.0);
  Eigen::VectorXcd psi =
      (-(1.0 - config.alpha()) / 2.0) *
      Eigen::kroneckerProduct(
          Eigen::kroneckerProduct(phi_plus, phi_minus).eval(), no_photons)
          .eval();
  psi(space.ravel({kPathY, kPathX, kNoPhotons})) += 1.0;
  psi(space.ravel({kAbsent, kAbsent, kPhotonPair})) += -config.beta() / 2.0;
  return psi;
}

} // namespace

TEST_CASE("beam splitter") {
  const Eigen::MatrixXcd bs = beam_splitter(Side::plus);
  const CompositeSpace& space = full_space();

  SUBCASE("splits a horizontal positron") {
    const StateVector in =
        basis_state(space, {kPathX, kPathX, kNoPhotons});
    const StateVector out = apply_unitary(bs, in);
    CHECK(std::abs(out.amplitudes()(space.ravel({kPathX, kPathX, 0})) -
                   1.0 / sqrt2) < 1e-14);
    CHECK(std::abs(out.amplitudes()(space.ravel({kPathY, kPathX, 0})) -
                   kI / sqrt2) < 1e-14);
  }

  SUBCASE("leaves an absent particle alone") {
    const StateVector in =
        basis_state(space, {kAbsent, kPathX, kNoPhotons});
    const StateVector out = apply_unitary(bs, in);
    CHECK(std::abs(out.amplitudes()(space.ravel({kAbsent, kPathX, 0})) -
                   1.0) < 1e-14);
  }

  SUBCASE("two passes act as a mirror") {
    CHECK((bs * bs - mirror(Side::plus)).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("unitary") {
    CHECK((bs * bs.adjoint() - Eigen::MatrixXcd::Identity(18, 18))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("mirror") {
  const Eigen::MatrixXcd m = mirror(Side::minus);
  const CompositeSpace& space = full_space();

  SUBCASE("reflects a vertical electron") {
    const StateVector in = basis_state(space, {kPathX, kPathY, kNoPhotons});
    const StateVector out = apply_unitary(m, in);
    CHECK(std::abs(out.amplitudes()(space.ravel({kPathX, kPathX, 0})) - kI) <
          1e-14);
  }

  SUBCASE("leaves the vacuum alone") {
    const StateVector in = basis_state(space, {kPathX, kAbsent, kNoPhotons});
    const StateVector out = apply_unitary(m, in);
    CHECK(std::abs(out.amplitudes()(space.ravel({kPathX, kAbsent, 0})) -
                   1.0) < 1e-14);
  }

  SUBCASE("squares to minus identity on the path sector") {
    const Eigen::MatrixXcd twice = m * m;
    const StateVector in = basis_state(space, {kPathY, kPathX, kNoPhotons});
    const StateVector out = apply_unitary(twice, in);
    CHECK(std::abs(out.amplitudes()(space.ravel({kPathY, kPathX, 0})) + 1.0) <
          1e-14);
  }
}

TEST_CASE("annihilation interaction") {
  const CompositeSpace& space = full_space();
  const int meet = space.ravel({kPathX, kPathY, kNoPhotons});
  const int gone = space.ravel({kAbsent, kAbsent, kPhotonPair});

  SUBCASE("p = 0 is the identity") {
    CHECK((annihilation(HardyConfig(0.0)) -
           Eigen::MatrixXcd::Identity(18, 18))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
  }

  SUBCASE("p = 1 swaps the overlap branch into radiation") {
    const Eigen::MatrixXcd u = annihilation(HardyConfig(1.0));
    CHECK(std::abs(u(gone, meet) - 1.0) < 1e-14);
    CHECK(std::abs(u(meet, meet)) < 1e-14);
  }

  SUBCASE("balanced interaction amplitudes") {
    const Eigen::MatrixXcd u = annihilation(HardyConfig(0.5));
    CHECK(std::abs(u(meet, meet) - 1.0 / sqrt2) < 1e-14);
    CHECK(std::abs(u(gone, meet) - 1.0 / sqrt2) < 1e-14);
  }

  SUBCASE("unitary across the parameter space") {
    for (const double p : grid(21)) {
      for (int k = 0; k < 8; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 8.0;
        const Eigen::MatrixXcd u = annihilation(HardyConfig(p, phi));
        CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(18, 18))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("hardy config") {
  CHECK_THROWS_AS(HardyConfig(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(HardyConfig(1.1), std::invalid_argument);
  const HardyConfig wrapped(0.5, -1.0);
  CHECK(wrapped.phi >= 0.0);
  CHECK(wrapped.phi < 2.0 * std::numbers::pi);
  CHECK(std::abs(std::norm(wrapped.beta()) + wrapped.alpha() *
                 wrapped.alpha() - 1.0) < 1e-12);
}

TEST_CASE("stage states") {
  SUBCASE("stage 3 matches the closed-form amplitudes") {
    const HardyConfig config(0.3, 1.2);
    const StateVector psi = stage_state(3, config);
    CHECK((psi.amplitudes() - paper_psi3(config)).cwiseAbs().maxCoeff() <
          1e-12);
  }

  SUBCASE("stage 4 matches the closed-form amplitudes") {
    const HardyConfig config(0.8, 2.4);
    const StateVector psi = stage_state(4, config);
    CHECK((psi.amplitudes() - paper_psi4(config)).cwiseAbs().maxCoeff() <
          1e-12);
  }

  SUBCASE("no interaction returns the input direction") {
    // Global phases aside, stage 4 at p = 0 reproduces stage 1.
    const StateVector out = stage_state(4, HardyConfig(0.0));
    const StateVector in = stage_state(1, HardyConfig(0.0));
    CHECK(std::abs(std::abs(in.overlap(out)) - 1.0) < 1e-10);
  }

  SUBCASE("normalization everywhere") {
    for (int stage = 1; stage <= 4; ++stage) {
      for (const double p : grid(11)) {
        const StateVector psi = stage_state(stage, HardyConfig(p, 0.7));
        CHECK(std::abs(psi.amplitudes().squaredNorm() - 1.0) <= 1e-12);
      }
    }
  }

  SUBCASE("invalid stage rejected") {
    CHECK_THROWS_AS(stage_state(0, HardyConfig(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(stage_state(5, HardyConfig(0.5)), std::invalid_argument);
  }
}

TEST_CASE("path observable") {
  const ProjectiveObservable path = path_observable(Side::plus);

  SUBCASE("complete family of rank-1 projectors") {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(3, 3);
    for (const auto& p : path.projectors()) {
      CHECK(std::abs(p.trace().real() - 1.0) < 1e-14);
      sum += p;
    }
    CHECK((sum - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-12);
  }

  SUBCASE("eigenstates are fixed points") {
    const auto eigen = DensityOperator::pure(
        basis_state(matter_space(), {kPathX, kPathY}));
    CHECK(is_reality_state(eigen, path, 1e-12));
  }

  SUBCASE("dephases the stage-2 matter state in the path basis") {
    const DensityOperator matter = partial_trace(
        DensityOperator::pure(stage_state(2, HardyConfig(0.4))), {"+", "-"});
    const DensityOperator projected = unrevealed_measurement(matter, path);
    // Diagonal in the + path index: coherences between different + digits
    // must be gone.
    const CompositeSpace& space = matter_space();
    for (int r = 0; r < 9; ++r) {
      for (int c = 0; c < 9; ++c) {
        if (space.digit(r, 0) != space.digit(c, 0)) {
          CHECK(std::abs(projected.matrix()(r, c)) < 1e-14);
        }
      }
    }
  }
}

TEST_CASE("stage reports") {
  SUBCASE("stage 1 is fully classical") {
    const StageReport r = stage_report(1, HardyConfig(0.6));
    CHECK(r.irreality_plus == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.irreality_minus == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.local_irreality_plus == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.local_irreality_minus == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.rbn == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.matter_purity == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("stage 2 paths are maximally unreal but uncorrelated") {
    const StageReport r = stage_report(2, HardyConfig(0.6));
    CHECK(r.irreality_plus == doctest::Approx(ln2).epsilon(1e-10));
    CHECK(r.irreality_minus == doctest::Approx(ln2).epsilon(1e-10));
    CHECK(r.local_irreality_plus == doctest::Approx(ln2).epsilon(1e-10));
    CHECK(r.local_irreality_minus == doctest::Approx(ln2).epsilon(1e-10));
    CHECK(r.rbn == doctest::Approx(0.0).epsilon(1e-10));
  }

  SUBCASE("stage 3 with no interaction recovers stage 2") {
    const StageReport r = stage_report(3, HardyConfig(0.0));
    CHECK(r.irreality_plus == doctest::Approx(ln2).epsilon(1e-10));
    CHECK(r.local_irreality_plus == doctest::Approx(ln2).epsilon(1e-10));
    CHECK(r.rbn == doctest::Approx(0.0).epsilon(1e-10));
  }

  SUBCASE("plus and minus metrics coincide") {
    for (const double p : grid(11)) {
      for (const int stage : {3, 4}) {
        const StageReport r = stage_report(stage, HardyConfig(p));
        CHECK(std::abs(r.irreality_plus - r.irreality_minus) < 1e-10);
        CHECK(std::abs(r.local_irreality_plus - r.local_irreality_minus) <
              1e-10);
      }
    }
  }

  SUBCASE("metrics ignore the interaction phase") {
    const StageReport a = stage_report(3, HardyConfig(0.6, 0.0));
    const StageReport b = stage_report(3, HardyConfig(0.6, 2.1));
    CHECK(std::abs(a.irreality_plus - b.irreality_plus) < 1e-12);
    CHECK(std::abs(a.local_irreality_plus - b.local_irreality_plus) < 1e-12);
    CHECK(std::abs(a.rbn - b.rbn) < 1e-12);
    CHECK(std::abs(a.matter_purity - b.matter_purity) < 1e-12);
  }
}

TEST_CASE("stage-3 closed forms") {
  SUBCASE("irreality endpoints") {
    CHECK(stage3_irreality_analytic(0.0) ==
          doctest::Approx(ln2).epsilon(1e-14));
    CHECK(stage3_irreality_analytic(1.0) ==
          doctest::Approx(kIrrealityP1).epsilon(1e-14));
    CHECK(stage3_irreality_analytic(1.0) ==
          doctest::Approx(-0.5 * ln2 + 0.75 * std::log(3.0))
              .epsilon(1e-14));
    CHECK_THROWS_AS(stage3_irreality_analytic(-0.2), std::invalid_argument);
    CHECK_THROWS_AS(stage3_irreality_analytic(1.2), std::invalid_argument);
  }

  SUBCASE("local irreality endpoints") {
    // Kernel values (2, 0, 8) at p = 0 and (1, 3 - sqrt5, 3 + sqrt5) at 1.
    CHECK(stage3_local_irreality_analytic(0.0) ==
          doctest::Approx(ln2).epsilon(1e-14));
    const double sqrt5 = std::sqrt(5.0);
    const double expected_p1 =
        -1.25 * ln2 + ((3.0 - sqrt5) * std::log(3.0 - sqrt5) +
                       (3.0 + sqrt5) * std::log(3.0 + sqrt5)) /
                          8.0;
    CHECK(stage3_local_irreality_analytic(1.0) ==
          doctest::Approx(expected_p1).epsilon(1e-14));
    CHECK(stage3_local_irreality_analytic(1.0) ==
          doctest::Approx(kLocalIrrealityP1).epsilon(1e-14));
  }

  SUBCASE("nonlocality endpoints") {
    CHECK(stage3_rbn_analytic(0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(stage3_rbn_analytic(1.0) ==
          doctest::Approx(-ln2 + 0.75 * std::log(3.0)).epsilon(1e-14));
    CHECK(stage3_rbn_analytic(1.0) ==
          doctest::Approx(kRbnP1).epsilon(1e-14));
  }

  SUBCASE("numeric metrics match the closed forms on the grid") {
    for (const double p : grid(11)) {
      const StageReport r = stage_report(3, HardyConfig(p));
      CHECK(std::abs(r.irreality_plus - stage3_irreality_analytic(p)) <
            1e-9);
      CHECK(std::abs(r.local_irreality_plus -
                     stage3_local_irreality_analytic(p)) < 1e-9);
      CHECK(std::abs(r.rbn - stage3_rbn_analytic(p)) < 1e-9);
    }
  }

  SUBCASE("nonlocality grows with the annihilation probability") {
    double previous = -1.0;
    for (const double p : grid(21)) {
      const double value = stage3_rbn_analytic(p);
      CHECK(value >= previous - 1e-12);
      previous = value;
    }
  }
}

TEST_CASE("matter purity closed forms") {
  CHECK(matter_purity_analytic(0.0).purity == doctest::Approx(1.0));
  CHECK(matter_purity_analytic(0.0).entanglement == doctest::Approx(0.0));
  CHECK(matter_purity_analytic(1.0).purity == doctest::Approx(5.0 / 8.0));
  CHECK(matter_purity_analytic(1.0).entanglement ==
        doctest::Approx(3.0 / 8.0));

  for (const double p : grid(11)) {
    const PurityEntanglement expect = matter_purity_analytic(p);
    CHECK(expect.purity + expect.entanglement ==
          doctest::Approx(1.0).epsilon(1e-14));
    const StageReport r3 = stage_report(3, HardyConfig(p));
    const StageReport r4 = stage_report(4, HardyConfig(p));
    CHECK(std::abs(r3.matter_purity - expect.purity) < 1e-10);
    CHECK(std::abs(r3.matter_linear_entropy - expect.entanglement) < 1e-10);
    CHECK(std::abs(r4.matter_purity - r3.matter_purity) < 1e-10);
  }
}

TEST_CASE("stage-4 asymptotics") {
  SUBCASE("leading order matches the numerics near zero") {
    const double p = 1e-3;
    const StageReport r = stage_report(4, HardyConfig(p));
    const Stage4Asymptotics asymp = stage4_asymptotics(p);
    CHECK(r.irreality_plus / asymp.irreality ==
          doctest::Approx(1.0).epsilon(0.05));
    CHECK(r.local_irreality_plus / asymp.local_irreality ==
          doctest::Approx(1.0).epsilon(0.05));
    CHECK(r.rbn / asymp.rbn == doctest::Approx(1.0).epsilon(0.05));
  }

  SUBCASE("all three quantities die out quadratically") {
    const Stage4Asymptotics nearly_zero = stage4_asymptotics(1e-8);
    CHECK(nearly_zero.irreality < 1e-14);
    CHECK(nearly_zero.local_irreality < 1e-14);
    CHECK(nearly_zero.rbn < 1e-14);
  }

  SUBCASE("ordering at small p") {
    const Stage4Asymptotics a = stage4_asymptotics(1e-3);
    CHECK(a.irreality > a.local_irreality);
    CHECK(a.local_irreality > a.rbn);
    const StageReport r = stage_report(4, HardyConfig(1e-3));
    CHECK(r.irreality_plus > r.local_irreality_plus);
    CHECK(r.local_irreality_plus > r.rbn);
  }

  SUBCASE("rejects the log divergence") {
    CHECK_THROWS_AS(stage4_asymptotics(0.0), std::invalid_argument);
    CHECK_THROWS_AS(stage4_asymptotics(-0.5), std::invalid_argument);
  }

  SUBCASE("numeric metrics vanish with the interaction") {
    const StageReport r = stage_report(4, HardyConfig(1e-7));
    CHECK(r.irreality_plus < 1e-12);
    CHECK(r.local_irreality_plus < 1e-12);
    CHECK(r.rbn < 1e-12);
  }

  SUBCASE("nonlocality strictly positive away from p = 0") {
    for (const double p : grid(21)) {
      const StageReport r = stage_report(4, HardyConfig(p));
      if (p == 0.0) {
        CHECK(r.rbn <= 1e-10);
      } else {
        CHECK(r.rbn > 1e-10);
      }
    }
  }
}

TEST_CASE("detection statistics") {
  SUBCASE("original interferometer statistics at p = 1") {
    const DetectionDistribution d = detection_distribution(HardyConfig(1.0));
    CHECK(d.xplus_xminus == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK(d.xplus_yminus == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK(d.yplus_xminus == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
    CHECK(d.yplus_yminus == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK(d.annihilation == doctest::Approx(4.0 / 16.0).epsilon(1e-12));
    CHECK(d.dark_both() == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK(d.at_least_one_dark() ==
          doctest::Approx(3.0 / 16.0).epsilon(1e-12));
  }

  SUBCASE("isolated interferometers never fire the dark detectors") {
    const DetectionDistribution d = detection_distribution(HardyConfig(0.0));
    CHECK(d.yplus_xminus == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.xplus_xminus == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(d.xplus_yminus == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(d.yplus_yminus == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(d.annihilation == doctest::Approx(0.0).epsilon(1e-14));
  }

  SUBCASE("dark probability closed form on a grid") {
    for (const double p : {0.25, 0.5, 0.75}) {
      const double expected =
          std::pow(1.0 - std::sqrt(1.0 - p), 2.0) / 16.0;
      CHECK(dark_probability(p) == doctest::Approx(expected).epsilon(1e-14));
      CHECK(detection_distribution(HardyConfig(p)).dark_both() ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }

  SUBCASE("distribution normalizes for every configuration") {
    for (const double p : grid(21)) {
      for (int k = 0; k < 4; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 4.0;
        CHECK(std::abs(detection_distribution(HardyConfig(p, phi)).sum() -
                       1.0) < 1e-10);
      }
    }
  }

  SUBCASE("dark probability endpoints and monotonicity") {
    CHECK(dark_probability(0.0) == doctest::Approx(0.0));
    CHECK(dark_probability(1.0) == doctest::Approx(1.0 / 16.0));
    CHECK(3.0 * dark_probability(1.0) ==
          doctest::Approx(3.0 / 16.0).epsilon(1e-14));
    double previous = -1.0;
    for (const double p : grid(21)) {
      const double value = dark_probability(p);
      CHECK(value >= previous);
      previous = value;
    }
  }

  SUBCASE("clicks ignore the interaction phase") {
    const DetectionDistribution a = detection_distribution({0.6, 0.0});
    const DetectionDistribution b = detection_distribution({0.6, 2.1});
    CHECK(std::abs(a.xplus_xminus - b.xplus_xminus) < 1e-12);
    CHECK(std::abs(a.xplus_yminus - b.xplus_yminus) < 1e-12);
    CHECK(std::abs(a.yplus_xminus - b.yplus_xminus) < 1e-12);
    CHECK(std::abs(a.yplus_yminus - b.yplus_yminus) < 1e-12);
    CHECK(std::abs(a.annihilation - b.annihilation) < 1e-12);
  }
}
