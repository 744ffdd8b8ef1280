#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "slepian/bridge.hpp"
#include "slepian/errors.hpp"
#include "slepian/normmath.hpp"
#include "slepian/oracle.hpp"

namespace slepian {
namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(v.size());
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

TEST(GaussianIncrementDensity, HandValues) {
  EXPECT_NEAR(gaussian_increment_density(vec({0.0}), vec({1.0})), normal_pdf(0.0), 1e-16);
  EXPECT_NEAR(gaussian_increment_density(vec({0.0, 0.0}), vec({0.5, 1.0})), 1 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(gaussian_increment_density(vec({1.0, -0.5}), vec({0.25, 1.0})),
              normal_pdf(1.0 / 0.5) / 0.5 * normal_pdf(-1.5 / std::sqrt(0.75)) / std::sqrt(0.75), 1e-15);
  EXPECT_GT(gaussian_increment_density(vec({2.0, -2.0, 2.0}), vec({0.1, 0.2, 0.3})), 0.0);
}

TEST(CrossingCorrection, HandValues) {
  EXPECT_NEAR(crossing_correction(vec({0.0}), vec({1.0, 1.0}), vec({1.0})), 1 - std::exp(-2.0), 1e-16);
  EXPECT_NEAR(crossing_correction(vec({0.0}), vec({1.0, 1.0}), vec({1.0})), 0.86466471676338731, 1e-16);
  EXPECT_EQ(crossing_correction(vec({0.2, 1.0}), vec({1.0, 1.0, 1.0}), vec({0.5, 1.0})), 0.0);
  EXPECT_EQ(crossing_correction(vec({0.2, 1.5}), vec({1.0, 1.0, 1.0}), vec({0.5, 1.0})), 0.0);
  EXPECT_EQ(crossing_correction(vec({0.0}), vec({-0.1, 1.0}), vec({1.0})), 0.0);
  EXPECT_NEAR(crossing_correction(vec({-50.0, -60.0}), vec({1.0, 1.0, 1.0}), vec({0.5, 1.0})), 1.0, 1e-15);
}

TEST(CrossingCorrection, InUnitInterval) {
  for (double u1 = -3.0; u1 <= 1.0; u1 += 0.1) {
    for (double u2 = -3.0; u2 <= 0.5; u2 += 0.1) {
      const double c = crossing_correction(vec({u1, u2}), vec({0.5, 1.0, 0.5}), vec({0.3, 1.0}));
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 1.0);
    }
  }
}

TEST(CrossingCorrection, MatchesSimulatedBridge) {
  OracleConfig cfg;
  cfg.n_paths = 50000;
  cfg.grid_steps = 1 << 14;
  cfg.seed = 11;
  struct Case {
    double u0, u1, c0, c1, dt;
  };
  for (const Case& k : {Case{0.0, 0.0, 1.0, 1.0, 1.0}, Case{-0.3, 0.2, 0.4, 0.9, 0.5}, Case{0.1, -1.0, 0.5, 0.0, 2.0}}) {
    const double exact = 1 - std::exp(-2 * (k.c0 - k.u0) * (k.c1 - k.u1) / k.dt);
    const OracleEstimate e = oracle_bridge_noncrossing(k.u0, k.u1, k.c0, k.c1, k.dt, cfg);
    EXPECT_GE(e.p_hat, exact - 3 * e.se);
    EXPECT_LE(std::abs(e.p_hat - exact), 3 * e.se + defaults::kGridBiasAllowance) << k.u0;
  }
}

TEST(SlepianIntegrand, ZeroAboveStartLevel) {
  const ReducedBoundary rb(PiecewiseLinearBoundary({{0, 0.5}, {1, 0.5}}));
  const IntegrandValue v = slepian_integrand({0.6, vec({0.0})}, rb);
  EXPECT_FALSE(v.indicator);
  EXPECT_EQ(v.value(), 0.0);
}

TEST(SlepianIntegrand, FarBelowIsDensityOnly) {
  const ReducedBoundary rb(PiecewiseLinearBoundary({{0, 0}, {0.5, 0}, {1, 0}}));
  const double x = -30.0;
  const auto u = vec({-3.0, -5.0});
  const IntegrandValue v = slepian_integrand({x, u}, rb);
  EXPECT_TRUE(v.indicator);
  EXPECT_NEAR(v.correction_part, 1.0, 1e-12);
  const double density = normal_pdf(x) * gaussian_increment_density(u, vec({rb.brownian_times()[1], 1.0}));
  EXPECT_NEAR(v.value() / density, 1.0, 1e-12);
}

TEST(SlepianIntegrand, NonNegativeAndSizeChecked) {
  const ReducedBoundary rb(PiecewiseLinearBoundary({{0, 1}, {0.3, 2}, {0.7, 0.5}, {1, 1}}));
  for (double x = -3.0; x <= 1.5; x += 0.5)
    for (double u = -2.0; u <= 2.0; u += 0.5) EXPECT_GE(slepian_integrand({x, vec({u, u / 2, -u})}, rb).value(), 0.0);
  EXPECT_THROW(slepian_integrand({0.0, vec({0.0})}, rb), InvalidInput);
}

}  // namespace
}  // namespace slepian
