#pragma once

// General continuous boundaries: evaluate piecewise-linear interpolants on
// dyadic grids n = 2, 4, 8, ... and watch the estimates settle. The limit is
// the non-crossing probability of f; no rate is known, so the stopping rule is
// empirical.

#include <vector>

#include "slepian/boundary.hpp"
#include "slepian/integrate.hpp"

namespace slepian {

enum class MethodPreference { automatic, quadrature, monte_carlo, quasi_monte_carlo };

std::string_view to_string(MethodPreference method);

struct ApproxConfig {
  double convergence_tol = defaults::kConvergenceTol;
  int max_segments = defaults::kMaxSegments;
  /// Stop at the first converged level; false runs every level up to max_segments.
  bool stop_on_convergence = true;
  /// `quadrature` evaluates every level by nested quadrature regardless of its
  /// segment count; `automatic` follows dispatch (quadrature up to
  /// quad.max_segments, Monte Carlo beyond).
  MethodPreference evaluator = MethodPreference::quadrature;
  QuadratureConfig quad = [] {
    QuadratureConfig q;
    q.abs_tol = defaults::kRefinementQuadratureAbsTol;
    return q;
  }();
  McConfig mc;

  void validate() const;
};

struct TraceEntry {
  int segments;
  ProbabilityResult result;
};

struct RefinementTrace {
  std::vector<TraceEntry> entries;
  bool converged = false;
  ProbabilityResult final;
};

/// Two successive levels agree when |p_n - p_{n/2}| <= convergence_tol plus
/// both error descriptors; convergence needs two agreements in a row.
/// Failure is reported through converged = false with the partial trace.
RefinementTrace general_ncp(const Boundary& f, const ApproxConfig& cfg = {});

}  // namespace slepian
