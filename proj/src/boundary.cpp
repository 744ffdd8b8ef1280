#include "slepian/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

#include "slepian/errors.hpp"

namespace slepian {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

PiecewiseLinearBoundary::PiecewiseLinearBoundary(std::vector<Knot> knots)
    : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw InvalidInput("piecewise boundary needs at least 2 knots");
  if (knots_.front().t != 0.0) throw InvalidInput("first knot must be at t = 0");
  if (knots_.back().t != 1.0) throw InvalidInput("last knot must be at t = 1");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const Knot& k = knots_[i];
    if (!std::isfinite(k.t) || !std::isfinite(k.c))
      throw InvalidInput("knot " + std::to_string(i) + " is not finite");
    if (k.t < 0.0 || k.t > 1.0)
      throw InvalidInput("knot " + std::to_string(i) + " lies outside [0, 1]");
    if (i > 0 && k.t - knots_[i - 1].t < kKnotSpacingTolerance) {
      std::ostringstream os;
      os << "knot times must be strictly increasing (knot " << i << " at t = " << k.t
         << " follows t = " << knots_[i - 1].t << ")";
      throw InvalidInput(os.str());
    }
  }
}

double PiecewiseLinearBoundary::operator()(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  auto right = std::upper_bound(knots_.begin(), knots_.end(), t,
                                [](double v, const Knot& k) { return v < k.t; });
  if (right == knots_.end()) return knots_.back().c;
  const Knot& hi = *right;
  const Knot& lo = *std::prev(right);
  const double w = (t - lo.t) / (hi.t - lo.t);
  return lo.c + w * (hi.c - lo.c);
}

double evaluate(const Boundary& boundary, double t) {
  return std::visit(overloaded{
                        [](const ConstantBoundary& b) { return b.a; },
                        [t](const LinearBoundary& b) { return b.a + b.b * t; },
                        [t](const PiecewiseLinearBoundary& b) { return b(t); },
                        [t](const SampledBoundary& b) { return b.f(t); },
                    },
                    boundary);
}

std::string kind(const Boundary& boundary) {
  return std::visit(overloaded{
                        [](const ConstantBoundary&) { return std::string("constant"); },
                        [](const LinearBoundary&) { return std::string("linear"); },
                        [](const PiecewiseLinearBoundary&) { return std::string("piecewise"); },
                        [](const SampledBoundary&) { return std::string("sampled"); },
                    },
                    boundary);
}

std::vector<SegmentParams> segment_params(const PiecewiseLinearBoundary& boundary) {
  const auto& k = boundary.knots();
  std::vector<SegmentParams> out;
  out.reserve(k.size() - 1);
  for (std::size_t i = 1; i < k.size(); ++i) {
    const double dt = k[i].t - k[i - 1].t;
    out.push_back({(k[i - 1].c * k[i].t - k[i].c * k[i - 1].t) / dt, (k[i].c - k[i - 1].c) / dt});
  }
  return out;
}

PiecewiseLinearBoundary refine(const Boundary& boundary, int segments) {
  if (segments < 1) throw InvalidInput("refine needs at least one segment");

  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(segments) + 1);
  for (int i = 0; i <= segments; ++i) times.push_back(static_cast<double>(i) / segments);

  if (const auto* pl = std::get_if<PiecewiseLinearBoundary>(&boundary)) {
    std::vector<double> merged;
    for (const Knot& k : pl->knots()) merged.push_back(k.t);
    merged.insert(merged.end(), times.begin(), times.end());
    std::sort(merged.begin(), merged.end());
    // Grid points within the spacing tolerance of an original knot collapse onto it.
    times.clear();
    for (double t : merged) {
      if (!times.empty() && t - times.back() < kKnotSpacingTolerance) {
        const bool original = std::any_of(pl->knots().begin(), pl->knots().end(),
                                          [t](const Knot& k) { return k.t == t; });
        if (original) times.back() = t;
        continue;
      }
      times.push_back(t);
    }
  }

  std::vector<Knot> knots;
  knots.reserve(times.size());
  for (double t : times) knots.push_back({t, evaluate(boundary, t)});
  return PiecewiseLinearBoundary(std::move(knots));
}

PiecewiseLinearBoundary as_piecewise(const Boundary& boundary) {
  return std::visit(
      overloaded{
          [](const ConstantBoundary& b) { return PiecewiseLinearBoundary({{0.0, b.a}, {1.0, b.a}}); },
          [](const LinearBoundary& b) {
            return PiecewiseLinearBoundary({{0.0, b.a}, {1.0, b.a + b.b}});
          },
          [](const PiecewiseLinearBoundary& b) { return b; },
          [](const SampledBoundary&) -> PiecewiseLinearBoundary {
            throw InvalidInput("a sampled boundary has no exact piecewise form; use refine");
          },
      },
      boundary);
}

}  // namespace slepian
