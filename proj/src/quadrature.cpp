#include <algorithm>
#include <cmath>
#include <sstream>

#include "slepian/closedform.hpp"
#include "slepian/errors.hpp"
#include "slepian/gauss_legendre.hpp"
#include "slepian/integrate.hpp"
#include "slepian/normmath.hpp"

namespace slepian {

void QuadratureConfig::validate() const {
  if (nodes_per_dim < 8) throw InvalidInput("quadrature needs nodes_per_dim >= 8");
  if (!(truncation >= 6.0)) throw InvalidInput("quadrature needs truncation >= 6 SDs");
  if (!(abs_tol > 0.0)) throw InvalidInput("quadrature abs_tol must be positive");
  if (!(panel_width_sd > 0.0)) throw InvalidInput("quadrature panel width must be positive");
  if (max_refinements < 0) throw InvalidInput("quadrature max_refinements must be >= 0");
  if (max_segments < 1) throw InvalidInput("quadrature max_segments must be >= 1");
}

namespace {

// Reduced-integral evaluation for fixed Gauss-Legendre order.
class KnotChain {
 public:
  KnotChain(const ReducedBoundary& boundary, const QuadratureConfig& cfg, int order)
      : boundary_(boundary), cfg_(cfg), rule_(gauss_legendre(order)) {
    const auto& u = boundary.brownian_times();
    const int n = boundary.segments();
    dt_.resize(n + 1);
    sd_.resize(n + 1);
    for (int i = 1; i <= n; ++i) {
      dt_[i] = u[i] - u[i - 1];
      sd_[i] = std::sqrt(dt_[i]);
    }
  }

  double integrate() {
    const double T = cfg_.truncation;
    const double hi = std::min(boundary_.start_level(), T);
    const double lo = -T;
    if (hi <= lo) return 0.0;

    Eigen::VectorXd xs;
    Eigen::VectorXd wx;
    append_composite(rule_, lo, hi, panels_for(hi - lo, 1.0), xs, wx);

    double total = 0.0;
    for (Eigen::Index k = 0; k < xs.size(); ++k) {
      boundary_image(boundary_, xs[k], h_);
      total += wx[k] * normal_pdf(xs[k]) * start_conditional(h_);
    }
    return total;
  }

  std::uint64_t evaluations() const noexcept { return evals_; }

 private:
  int panels_for(double width, double scale) const {
    return std::max(1, static_cast<int>(std::ceil(width / (cfg_.panel_width_sd * scale))));
  }

  // P(B stays below the piecewise line through h on [0, 1] | B(0) = 0).
  double start_conditional(const std::vector<double>& h) {
    const int n = boundary_.segments();
    if (h[0] <= 0.0) return 0.0;
    if (n == 1) {
      ++evals_;
      return bachelier_levy(h[0], (h[1] - h[0]) / dt_[1], dt_[1]);
    }

    const double T = cfg_.truncation;

    // Knot 1: density from the point mass at u_0 = 0.
    if (!knot_window(1, h, nodes_, weights_)) return 0.0;
    mass_.resize(nodes_.size());
    for (Eigen::Index k = 0; k < nodes_.size(); ++k) {
      mass_[k] = weights_[k] * kernel(1, 0.0, nodes_[k], h[0], h[1]);
    }
    evals_ += nodes_.size();

    // Knots 2..n-1: propagate the sub-density through the banded kernel.
    for (int i = 2; i < n; ++i) {
      if (!knot_window(i, h, next_nodes_, next_weights_)) return 0.0;
      next_mass_.setZero(next_nodes_.size());
      const double band = T * sd_[i];
      Eigen::Index first = 0;
      for (Eigen::Index k = 0; k < next_nodes_.size(); ++k) {
        const double v = next_nodes_[k];
        while (first < nodes_.size() && nodes_[first] < v - band) ++first;
        double acc = 0.0;
        for (Eigen::Index j = first; j < nodes_.size() && nodes_[j] <= v + band; ++j) {
          acc += mass_[j] * kernel(i, nodes_[j], v, h[i - 1], h[i]);
          ++evals_;
        }
        next_mass_[k] = next_weights_[k] * acc;
      }
      nodes_.swap(next_nodes_);
      weights_.swap(next_weights_);
      mass_.swap(next_mass_);
    }

    // Segment n analytically.
    const double drop = h[n] - h[n - 1];
    double total = 0.0;
    for (Eigen::Index j = 0; j < nodes_.size(); ++j) {
      total += mass_[j] * bachelier_levy(h[n - 1] - nodes_[j], drop / dt_[n], dt_[n]);
    }
    evals_ += nodes_.size();
    return total;
  }

  // Composite rule for B(u_i) on its window [-T sqrt(u_i), min(h_i, T sqrt(u_i))].
  bool knot_window(int i, const std::vector<double>& h, Eigen::VectorXd& nodes,
                   Eigen::VectorXd& weights) const {
    const double spread = cfg_.truncation * std::sqrt(boundary_.brownian_times()[i]);
    const double lo = -spread;
    const double hi = std::min(h[i], spread);
    nodes.resize(0);
    weights.resize(0);
    if (hi <= lo) return false;
    const double scale = std::min(sd_[i], sd_[i + 1]);
    append_composite(rule_, lo, hi, panels_for(hi - lo, scale), nodes, weights);
    return true;
  }

  // Transition density from B(u_{i-1}) = from to B(u_i) = to, times the
  // probability that the connecting bridge stays below the chord.
  double kernel(int i, double from, double to, double h_prev, double h_next) const {
    const double d = to - from;
    const double gauss = inv_sqrt_2pi<double> / sd_[i] * std::exp(-0.5 * d * d / dt_[i]);
    const double correction = 1.0 - std::exp(-2.0 * (h_prev - from) * (h_next - to) / dt_[i]);
    return gauss * correction;
  }

  const ReducedBoundary& boundary_;
  const QuadratureConfig& cfg_;
  GaussLegendreRule rule_;
  std::vector<double> dt_;
  std::vector<double> sd_;
  std::vector<double> h_;
  Eigen::VectorXd nodes_, weights_, mass_;
  Eigen::VectorXd next_nodes_, next_weights_, next_mass_;
  std::uint64_t evals_ = 0;
};

}  // namespace

ProbabilityResult piecewise_ncp_quadrature(const PiecewiseLinearBoundary& l,
                                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (l.segments() > cfg.max_segments) throw DimensionTooLarge(l.segments(), cfg.max_segments);

  const ReducedBoundary reduced(l);
  int order = cfg.nodes_per_dim;
  std::uint64_t evals = 0;

  KnotChain coarse(reduced, cfg, order);
  double previous = coarse.integrate();
  evals += coarse.evaluations();

  double estimate = previous;
  double error = 0.0;
  for (int r = 0; r <= cfg.max_refinements; ++r) {
    order *= 2;
    KnotChain fine(reduced, cfg, order);
    estimate = fine.integrate();
    evals += fine.evaluations();
    error = std::abs(estimate - previous);
    if (error <= cfg.abs_tol) {
      ProbabilityResult out;
      out.p = std::clamp(estimate, 0.0, 1.0);
      out.err = std::max(error, 1e-15);
      out.err_kind = ErrorKind::abs_tol;
      out.method = Method::quadrature;
      out.n_evals = evals;
      return out;
    }
    previous = estimate;
  }
  std::ostringstream os;
  os << "NonConvergence: quadrature error estimate " << error << " exceeds abs_tol " << cfg.abs_tol
     << " at Gauss-Legendre order " << order;
  throw NonConvergence(os.str(), std::clamp(estimate, 0.0, 1.0), error);
}

}  // namespace slepian
