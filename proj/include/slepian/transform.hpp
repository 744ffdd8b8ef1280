#pragma once

// Reduction of the Slepian problem to a Brownian one. Given S(0) = x the
// process S(t) has the law of Z_t = (2 - t) B(t / (2 - t)) + (1 - t) x, so
// staying below l(t) on [0, 1] is the event that B(u) stays below
//   h(x, u) = (1 + u)/2 * l(2u / (1 + u)) - (1 - u)/2 * x,   u in [0, 1].
// h is piecewise linear in u with knots at the Brownian times t_i / (2 - t_i).

#include <vector>

#include "slepian/boundary.hpp"

namespace slepian {

/// Density of S(t) at y given S(0) = x: normal with mean (1 - t) x and
/// variance t (2 - t). Requires 0 < t <= 1.
double conditional_density(double t, double y, double x);

/// Covariance of S(t1), S(t2) given S(0): min(t1 (2 - t2), t2 (2 - t1)).
double conditional_covariance(double t1, double t2);

/// Slepian time s in [0, 1] to Brownian time s / (2 - s).
inline double brownian_time(double s) { return s / (2.0 - s); }

/// Brownian time u in [0, 1] to Slepian time 2u / (u + 1).
inline double slepian_time(double u) { return 2.0 * u / (u + 1.0); }

/// Piecewise-linear boundary prepared for the reduction: its segment lines and
/// the Brownian images of its knot times, computed once.
class ReducedBoundary {
 public:
  explicit ReducedBoundary(const PiecewiseLinearBoundary& boundary);

  int segments() const noexcept { return static_cast<int>(segments_.size()); }
  const std::vector<SegmentParams>& segment_lines() const noexcept { return segments_; }
  /// u_0 = 0, ..., u_n = 1.
  const std::vector<double>& brownian_times() const noexcept { return times_; }
  /// l(0): the largest admissible starting value S(0).
  double start_level() const noexcept { return segments_.front().intercept; }
  const PiecewiseLinearBoundary& source() const noexcept { return source_; }

 private:
  PiecewiseLinearBoundary source_;
  std::vector<SegmentParams> segments_;
  std::vector<double> times_;
};

/// Values h_0(x), ..., h_n(x) of the Brownian-side boundary at the knots.
struct TransformedKnots {
  double x;
  std::vector<double> h;
};

/// h_i(x) = (a_i/2 + b_i + x/2) u_i + a_i/2 - x/2 with (a_i, b_i) the line of
/// segment i and u_i its right Brownian knot; h_0(x) = (a_1 - x)/2.
TransformedKnots boundary_image(const ReducedBoundary& boundary, double x);

/// Same as above, writing into `h` (size n + 1) to avoid allocation in loops.
void boundary_image(const ReducedBoundary& boundary, double x, std::vector<double>& h);

}  // namespace slepian
