#pragma once

// Crossing-corrected Brownian integrand. For Brownian values u_1..u_n at knot
// times t_1 < ... < t_n (u_0 = 0 at t_0 = 0) and a boundary with knot values
// c_0..c_n, linear between knots,
//
//   P(B <= c on [0, t_n]) = int  prod_i N(u_i - u_{i-1}; t_i - t_{i-1})
//                                * prod_i (1 - exp(-2 (c_{i-1} - u_{i-1})(c_i - u_i) / (t_i - t_{i-1})))
//
// over u_i <= c_i. Each correction factor is the probability that the bridge
// between consecutive knots stays below the chord.

#include <cmath>

#include <Eigen/Dense>

#include "slepian/normmath.hpp"
#include "slepian/transform.hpp"

namespace slepian {

struct BridgeSample {
  double x;
  Eigen::VectorXd u;  ///< u_1..u_n; u_0 = 0 is implicit
};

struct IntegrandValue {
  double density_part = 0.0;
  double correction_part = 0.0;
  bool indicator = false;

  double value() const noexcept { return indicator ? density_part * correction_part : 0.0; }
};

/// Joint density of Brownian values u_1..u_n at `times` (t_1..t_n, t_0 = 0).
template <typename DerivedU, typename DerivedT>
typename DerivedU::Scalar gaussian_increment_density(const Eigen::DenseBase<DerivedU>& u,
                                                     const Eigen::DenseBase<DerivedT>& times) {
  using Scalar = typename DerivedU::Scalar;
  using std::exp;
  using std::log;
  Scalar log_density = Scalar(0);
  Scalar prev_u = Scalar(0);
  Scalar prev_t = Scalar(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const Scalar dt = times[i] - prev_t;
    const Scalar du = u[i] - prev_u;
    log_density += log(inv_sqrt_2pi<Scalar>) - Scalar(0.5) * log(dt) - du * du / (Scalar(2) * dt);
    prev_u = u[i];
    prev_t = times[i];
  }
  return exp(log_density);
}

/// Product of the bridge non-crossing factors. `knot_values` holds c_0..c_n.
/// Returns 0 when any u_i (including u_0 = 0) lies above its knot value.
template <typename DerivedU, typename DerivedC, typename DerivedT>
typename DerivedU::Scalar crossing_correction(const Eigen::DenseBase<DerivedU>& u,
                                              const Eigen::DenseBase<DerivedC>& knot_values,
                                              const Eigen::DenseBase<DerivedT>& times) {
  using Scalar = typename DerivedU::Scalar;
  using std::exp;
  Scalar prev_gap = knot_values[0];
  if (prev_gap < Scalar(0)) return Scalar(0);
  Scalar prev_t = Scalar(0);
  Scalar product = Scalar(1);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const Scalar gap = knot_values[i + 1] - u[i];
    if (gap < Scalar(0)) return Scalar(0);
    const Scalar dt = times[i] - prev_t;
    product *= Scalar(1) - exp(Scalar(-2) * prev_gap * gap / dt);
    prev_gap = gap;
    prev_t = times[i];
  }
  return product;
}

/// The integrand of the reduced (n+1)-dimensional non-crossing integral at
/// (x, u_1..u_n): phi(x) * increment density * correction with knot values
/// h_i(x) at Brownian times t_i / (2 - t_i).
IntegrandValue slepian_integrand(const BridgeSample& sample, const ReducedBoundary& boundary);

}  // namespace slepian
