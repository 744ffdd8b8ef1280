#include "slepian/dispatch.hpp"

#include <sstream>

#include "slepian/errors.hpp"

namespace slepian {

namespace {

ProbabilityResult from_closed_form(const ClosedFormResult& r, Method method) {
  ProbabilityResult out;
  out.p = r.p;
  out.err = 0.0;
  out.err_kind = ErrorKind::exact;
  out.method = method;
  out.n_evals = 1;
  out.branch = r.branch;
  return out;
}

ProbabilityResult piecewise(const PiecewiseLinearBoundary& l, const DispatchPrefs& prefs) {
  switch (prefs.method) {
    case MethodPreference::automatic:
      if (l.segments() <= prefs.quad.max_segments) return piecewise_ncp_quadrature(l, prefs.quad);
      return piecewise_ncp_mc(l, prefs.mc);
    case MethodPreference::quadrature:
      return piecewise_ncp_quadrature(l, prefs.quad);
    case MethodPreference::monte_carlo: {
      McConfig m = prefs.mc;
      m.sampler = Sampler::pseudo;
      return piecewise_ncp_mc(l, m);
    }
    case MethodPreference::quasi_monte_carlo: {
      McConfig m = prefs.mc;
      m.sampler = Sampler::low_discrepancy;
      return piecewise_ncp_mc(l, m);
    }
  }
  throw InvalidInput("unknown method preference");
}

}  // namespace

ProbabilityResult dispatch(const Boundary& boundary, const DispatchPrefs& prefs) {
  if (const auto* s = std::get_if<SampledBoundary>(&boundary)) {
    const RefinementTrace trace = general_ncp(*s, prefs.approx);
    if (!trace.converged) {
      std::ostringstream os;
      os << "NonConvergence: refinement did not settle by " << trace.entries.back().segments
         << " segments";
      throw NonConvergence(os.str(), trace.final.p, trace.final.err);
    }
    return trace.final;
  }
  if (prefs.method == MethodPreference::automatic) {
    if (const auto* c = std::get_if<ConstantBoundary>(&boundary))
      return from_closed_form(constant_ncp(c->a), Method::closed_form_constant);
    if (const auto* l = std::get_if<LinearBoundary>(&boundary))
      return from_closed_form(linear_ncp(l->a, l->b), Method::closed_form_linear);
  }
  return piecewise(as_piecewise(boundary), prefs);
}

}  // namespace slepian
