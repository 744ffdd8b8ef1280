#pragma once

#include "slepian/approx.hpp"
#include "slepian/boundary.hpp"
#include "slepian/integrate.hpp"

namespace slepian {

struct DispatchPrefs {
  MethodPreference method = MethodPreference::automatic;
  QuadratureConfig quad;
  McConfig mc;
  ApproxConfig approx;
};

/// Routes a boundary to its evaluator. With `automatic`: constants and lines
/// use the closed forms, piecewise-linear boundaries use quadrature up to
/// quad.max_segments segments and Monte Carlo beyond, sampled boundaries go
/// through refinement. A forced method applies to every non-sampled boundary.
/// Throws NonConvergence if refinement of a sampled boundary does not settle.
ProbabilityResult dispatch(const Boundary& boundary, const DispatchPrefs& prefs = {});

}  // namespace slepian
