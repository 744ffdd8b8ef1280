#pragma once

// Boundary functions f on [0, 1] and their piecewise-linear partitions.

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace slepian {

struct Knot {
  double t;
  double c;
};

/// Line a + b t on one segment [t_{i-1}, t_i] of a partition.
struct SegmentParams {
  double intercept;
  double slope;
};

/// Knot times closer than this are rejected as duplicates.
inline constexpr double kKnotSpacingTolerance = 1e-12;

/// Continuous piecewise-linear function through ordered knots, first knot at
/// t = 0 and last at t = 1, times strictly increasing.
class PiecewiseLinearBoundary {
 public:
  explicit PiecewiseLinearBoundary(std::vector<Knot> knots);

  const std::vector<Knot>& knots() const noexcept { return knots_; }
  int segments() const noexcept { return static_cast<int>(knots_.size()) - 1; }

  /// Linear interpolation; t is clamped into [0, 1].
  double operator()(double t) const;

 private:
  std::vector<Knot> knots_;
};

struct ConstantBoundary {
  double a;
};

struct LinearBoundary {
  double a;
  double b;
};

/// Arbitrary continuous boundary given by an evaluator. Continuity is the
/// caller's promise.
struct SampledBoundary {
  std::function<double(double)> f;
  std::string label = "sampled";
};

using Boundary =
    std::variant<ConstantBoundary, LinearBoundary, PiecewiseLinearBoundary, SampledBoundary>;

double evaluate(const Boundary& boundary, double t);

/// Short tag naming the alternative: "constant", "linear", "piecewise", "sampled".
std::string kind(const Boundary& boundary);

std::vector<SegmentParams> segment_params(const PiecewiseLinearBoundary& boundary);

/// Piecewise-linear interpolant of `boundary` on the uniform partition with
/// `segments` pieces. Piecewise-linear input keeps its own knots as well, so
/// the result represents it exactly.
PiecewiseLinearBoundary refine(const Boundary& boundary, int segments);

/// Single-segment or two-knot representation of closed-form boundaries.
PiecewiseLinearBoundary as_piecewise(const Boundary& boundary);

}  // namespace slepian
