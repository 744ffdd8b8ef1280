#pragma once

// Evaluation of P(S(t) <= l(t) on [0, 1]) for piecewise-linear l through the
// reduced integral over the start value x = S(0) and the Brownian values at
// the transformed knots.

#include <cstdint>
#include <optional>
#include <string_view>

#include "slepian/boundary.hpp"
#include "slepian/closedform.hpp"
#include "slepian/defaults.hpp"
#include "slepian/transform.hpp"

namespace slepian {

enum class Method {
  closed_form_constant,
  closed_form_linear,
  quadrature,
  monte_carlo,
  quasi_monte_carlo,
  refinement,
};

enum class ErrorKind { exact, abs_tol, std_error };

std::string_view to_string(Method method);
std::string_view to_string(ErrorKind kind);

struct ProbabilityResult {
  double p = 0.0;
  double err = 0.0;  ///< tolerance estimate or standard error, see err_kind
  ErrorKind err_kind = ErrorKind::exact;
  Method method = Method::closed_form_constant;
  std::uint64_t n_evals = 0;
  std::optional<std::uint64_t> seed;
  std::optional<ClosedFormBranch> branch;
};

struct QuadratureConfig {
  int nodes_per_dim = defaults::kNodesPerPanel;  ///< Gauss-Legendre order per panel, >= 8
  double truncation = defaults::kTruncationSd;   ///< window half-width in SDs, >= 6
  double abs_tol = defaults::kQuadratureAbsTol;
  double panel_width_sd = defaults::kPanelWidthSd;
  int max_refinements = defaults::kQuadratureMaxRefinements;
  int max_segments = defaults::kQuadratureMaxSegments;

  void validate() const;
};

enum class Sampler { pseudo, low_discrepancy };

std::string_view to_string(Sampler sampler);

struct McConfig {
  std::uint64_t n_samples = defaults::kSamples;  ///< >= 1000
  Sampler sampler = Sampler::pseudo;
  std::uint64_t seed = defaults::kSeed;
  std::uint64_t batch = defaults::kBatch;
  int qmc_replicates = defaults::kQmcReplicates;
  int threads = defaults::kThreads;

  void validate() const;
};

/// Nested Gauss-Legendre evaluation. The outer start value and each interior
/// Brownian knot value get a composite rule on their truncated admissible
/// window; the last segment is integrated analytically (Bachelier-Levy).
/// Because the integrand is a chain of kernels between consecutive knots, the
/// nested sums are accumulated knot by knot. The error is the difference
/// between successive doublings of the per-panel order.
///
/// Throws DimensionTooLarge when l has more than cfg.max_segments segments and
/// NonConvergence when the error estimate stays above cfg.abs_tol.
ProbabilityResult piecewise_ncp_quadrature(const PiecewiseLinearBoundary& l,
                                           const QuadratureConfig& cfg = {});

/// Unbiased estimate of the same integral: x ~ N(0, 1) and Brownian increments
/// between knots are sampled, the bridge correction product is averaged.
/// Deterministic for a fixed seed and sampler, independent of cfg.threads.
ProbabilityResult piecewise_ncp_mc(const PiecewiseLinearBoundary& l, const McConfig& cfg = {});

/// Per-sample value of the Monte Carlo estimator for standard normals
/// z_0..z_n (z_0 drives x, z_i the i-th Brownian increment).
double mc_estimator(const ReducedBoundary& boundary, const double* normals,
                    std::vector<double>& scratch);

}  // namespace slepian
