#pragma once

// Every tunable default in one place. The CLI reads overrides from
// environment variables named SLEPIAN_<NAME> (see apply_environment).

#include <cstdint>

namespace slepian::defaults {

inline constexpr const char* kVersion = "0.1.0";

// Nested quadrature
inline constexpr int kNodesPerPanel = 8;           ///< Gauss-Legendre order on each panel
inline constexpr double kTruncationSd = 8.0;       ///< half-width of every window in SDs
inline constexpr double kPanelWidthSd = 2.0;       ///< panel width in local kernel SDs
inline constexpr double kQuadratureAbsTol = 1e-5;
inline constexpr int kQuadratureMaxRefinements = 2;
inline constexpr int kQuadratureMaxSegments = 4;

// Monte Carlo over the reduced integral
inline constexpr std::uint64_t kSamples = 1'000'000;
inline constexpr std::uint64_t kSeed = 20170412;
inline constexpr std::uint64_t kBatch = 1u << 16;
inline constexpr int kQmcReplicates = 16;

// Refinement of general boundaries
inline constexpr double kConvergenceTol = 1e-3;
inline constexpr int kMaxSegments = 256;
inline constexpr double kRefinementQuadratureAbsTol = 1e-7;

// Path oracle
inline constexpr std::uint64_t kOraclePaths = 100'000;
inline constexpr int kOracleSteps = 1 << 14;
inline constexpr double kGridBiasAllowance = 5e-3;

/// 0 means one worker per hardware thread.
inline constexpr int kThreads = 0;

}  // namespace slepian::defaults
