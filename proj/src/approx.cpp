#include "slepian/approx.hpp"

#include <cmath>

#include "slepian/errors.hpp"

namespace slepian {

std::string_view to_string(MethodPreference method) {
  switch (method) {
    case MethodPreference::automatic:
      return "auto";
    case MethodPreference::quadrature:
      return "quad";
    case MethodPreference::monte_carlo:
      return "mc";
    case MethodPreference::quasi_monte_carlo:
      return "qmc";
  }
  return "unknown";
}

void ApproxConfig::validate() const {
  if (!(convergence_tol > 0.0)) throw InvalidInput("convergence_tol must be positive");
  if (max_segments < 2) throw InvalidInput("max_segments must be at least 2");
  quad.validate();
  mc.validate();
}

namespace {

ProbabilityResult evaluate_level(const PiecewiseLinearBoundary& level, const ApproxConfig& cfg) {
  switch (cfg.evaluator) {
    case MethodPreference::quadrature: {
      QuadratureConfig q = cfg.quad;
      q.max_segments = std::max(q.max_segments, level.segments());
      return piecewise_ncp_quadrature(level, q);
    }
    case MethodPreference::automatic:
      if (level.segments() <= cfg.quad.max_segments) return piecewise_ncp_quadrature(level, cfg.quad);
      return piecewise_ncp_mc(level, cfg.mc);
    case MethodPreference::monte_carlo: {
      McConfig m = cfg.mc;
      m.sampler = Sampler::pseudo;
      return piecewise_ncp_mc(level, m);
    }
    case MethodPreference::quasi_monte_carlo: {
      McConfig m = cfg.mc;
      m.sampler = Sampler::low_discrepancy;
      return piecewise_ncp_mc(level, m);
    }
  }
  throw InvalidInput("unknown refinement evaluator");
}

}  // namespace

RefinementTrace general_ncp(const Boundary& f, const ApproxConfig& cfg) {
  cfg.validate();
  RefinementTrace trace;
  int agreements = 0;
  std::uint64_t evals = 0;

  for (int n = 2; n <= cfg.max_segments; n *= 2) {
    ProbabilityResult r;
    try {
      r = evaluate_level(refine(f, n), cfg);
    } catch (const NonConvergence&) {
      agreements = 0;
      break;
    }
    evals += r.n_evals;
    if (!trace.entries.empty()) {
      const ProbabilityResult& prev = trace.entries.back().result;
      const bool agree = std::abs(r.p - prev.p) <= cfg.convergence_tol + r.err + prev.err;
      agreements = agree ? agreements + 1 : 0;
    }
    trace.entries.push_back({n, r});
    if (cfg.stop_on_convergence && agreements >= 2) break;
  }

  trace.converged = agreements >= 2;
  if (trace.entries.empty()) throw NonConvergence("refinement produced no estimate", 0.0, 1.0);

  const ProbabilityResult& last = trace.entries.back().result;
  trace.final = last;
  trace.final.method = Method::refinement;
  trace.final.err_kind = ErrorKind::abs_tol;
  trace.final.n_evals = evals;
  trace.final.err = last.err;
  if (trace.entries.size() >= 2) {
    trace.final.err += std::abs(last.p - trace.entries[trace.entries.size() - 2].result.p);
  }
  return trace;
}

}  // namespace slepian
