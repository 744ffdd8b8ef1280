#include "slepian/transform.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "slepian/errors.hpp"
#include "slepian/normmath.hpp"

namespace slepian {

double conditional_density(double t, double y, double x) {
  if (!(t > 0.0 && t <= 1.0))
    throw InvalidInput("conditional density needs 0 < t <= 1 (S(t) | S(0) is a point mass at t = 0)");
  const double var = t * (2.0 - t);
  const double z = y + (t - 1.0) * x;
  return inv_sqrt_2pi<double> / std::sqrt(var) * std::exp(-0.5 * z * z / var);
}

double conditional_covariance(double t1, double t2) {
  return std::min(t1 * (2.0 - t2), t2 * (2.0 - t1));
}

ReducedBoundary::ReducedBoundary(const PiecewiseLinearBoundary& boundary)
    : source_(boundary), segments_(segment_params(boundary)) {
  times_.reserve(boundary.knots().size());
  for (const Knot& k : boundary.knots()) times_.push_back(brownian_time(k.t));
}

void boundary_image(const ReducedBoundary& boundary, double x, std::vector<double>& h) {
  const auto& lines = boundary.segment_lines();
  const auto& u = boundary.brownian_times();
  const std::size_t n = lines.size();
  h.resize(n + 1);
  h[0] = 0.5 * (lines[0].intercept - x);
  for (std::size_t i = 1; i <= n; ++i) {
    const SegmentParams& s = lines[i - 1];
    h[i] = (0.5 * s.intercept + s.slope + 0.5 * x) * u[i] + 0.5 * s.intercept - 0.5 * x;
#ifndef NDEBUG
    if (i < n) {
      const SegmentParams& r = lines[i];
      const double from_right = (0.5 * r.intercept + r.slope + 0.5 * x) * u[i] + 0.5 * r.intercept - 0.5 * x;
      assert(std::abs(from_right - h[i]) <= 1e-10 * (1.0 + std::abs(h[i])));
    }
#endif
  }
}

TransformedKnots boundary_image(const ReducedBoundary& boundary, double x) {
  TransformedKnots out{x, {}};
  boundary_image(boundary, x, out.h);
  return out;
}

}  // namespace slepian
