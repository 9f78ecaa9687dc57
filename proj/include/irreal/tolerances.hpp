#pragma once

namespace irreal::tol {

// Default numerical tolerances. Every operation that depends on one of
// these accepts it as a parameter; the values here are the contract
// defaults the acceptance suite pins.
inline constexpr double kNorm = 1e-12;
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kEigenvalueFloor = 1e-10;
inline constexpr double kDistribution = 1e-12;
inline constexpr double kProjector = 1e-12;
inline constexpr double kSpectralHermiticity = 1e-10;
inline constexpr double kSpectralReconstruction = 1e-10;
inline constexpr double kSupport = 1e-10;
inline constexpr double kMetricClamp = 1e-10;

}  // namespace irreal::tol
