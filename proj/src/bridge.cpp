#include "slepian/bridge.hpp"

#include "slepian/errors.hpp"

namespace slepian {

IntegrandValue slepian_integrand(const BridgeSample& sample, const ReducedBoundary& boundary) {
  const int n = boundary.segments();
  if (sample.u.size() != n)
    throw InvalidInput("bridge sample has " + std::to_string(sample.u.size()) +
                       " knot values, boundary has " + std::to_string(n) + " segments");

  IntegrandValue out;
  if (sample.x > boundary.start_level()) return out;

  const TransformedKnots image = boundary_image(boundary, sample.x);
  const Eigen::Map<const Eigen::VectorXd> h(image.h.data(), n + 1);
  const Eigen::Map<const Eigen::VectorXd> times(boundary.brownian_times().data() + 1, n);

  out.indicator = (sample.u.array() <= h.tail(n).array()).all();
  out.density_part = normal_pdf(sample.x) * gaussian_increment_density(sample.u, times);
  out.correction_part = out.indicator ? crossing_correction(sample.u, h, times) : 0.0;
  return out;
}

}  // namespace slepian
