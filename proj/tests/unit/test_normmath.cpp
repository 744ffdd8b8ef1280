#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "slepian/normmath.hpp"

namespace slepian {
namespace {

// 40-digit reference values (tests/oracles/frozen_values.py).
constexpr double kPhi1 = 0.24197072451914335;
constexpr double kCdf1 = 0.84134474606854295;
constexpr double kFused12 = 0.0017680517118520166;

double ulps(double got, double want) {
  const double spacing = std::nextafter(std::abs(want), std::numeric_limits<double>::infinity()) - std::abs(want);
  return std::abs(got - want) / spacing;
}

TEST(NormalPdf, ReferenceValues) {
  EXPECT_DOUBLE_EQ(normal_pdf(0.0), 0.3989422804014327);
  EXPECT_LE(ulps(normal_pdf(1.0), kPhi1), 1.0);
  EXPECT_EQ(normal_pdf(-2.5), normal_pdf(2.5));
}

TEST(NormalPdf, UnderflowsToZeroFarOut) {
  EXPECT_EQ(normal_pdf(40.0), 0.0);
  EXPECT_GT(normal_pdf(38.0), 0.0);
}

TEST(NormalCdf, ReferenceValues) {
  EXPECT_EQ(normal_cdf(0.0), 0.5);
  EXPECT_EQ(normal_cdf(std::numeric_limits<double>::infinity()), 1.0);
  EXPECT_EQ(normal_cdf(-std::numeric_limits<double>::infinity()), 0.0);
  EXPECT_NEAR(normal_cdf(1.0), kCdf1, 1e-16);
}

TEST(NormalCdf, ReflectionSymmetry) {
  for (double x = -10.0; x <= 10.0; x += 0.01) {
    EXPECT_LE(std::abs(normal_cdf(x) + normal_cdf(-x) - 1.0), 1e-15) << x;
  }
}

TEST(NormalCdf, DerivativeMatchesDensity) {
  const double h = 1e-5;
  for (double x = -6.0; x <= 6.0; x += 0.05) {
    const double slope = (normal_cdf(x + h) - normal_cdf(x - h)) / (2 * h);
    EXPECT_NEAR(slope, normal_pdf(x), 1e-8) << x;
  }
}

TEST(NormalCdf, LowerTailKeepsRelativeAccuracy) {
  // Phi(-20) = 2.7536241186062336951e-89
  EXPECT_NEAR(normal_cdf(-20.0) / 2.7536241186062336951e-89, 1.0, 1e-13);
}

TEST(LogNormalCdf, AgreesWithDirectLogAndAsymptoticTail) {
  for (double x = -29.0; x <= 8.0; x += 0.5) {
    EXPECT_NEAR(log_normal_cdf(x), std::log(normal_cdf(x)), 1e-12 * std::max(1.0, std::abs(std::log(normal_cdf(x))))) << x;
  }
  // log Phi(-40) = -804.60844201375378817 (mpmath)
  EXPECT_NEAR(log_normal_cdf(-40.0), -804.60844201375378817, 1e-10);
  EXPECT_TRUE(std::isfinite(log_normal_cdf(-1e3)));
}

TEST(FusedPdfProduct, ReferenceValues) {
  EXPECT_NEAR(fused_pdf_product(0.0, 0.0), 0.15915494309189535, 1e-17);
  EXPECT_EQ(fused_pdf_product(3.0, -3.0), inv_2pi<double>);
  EXPECT_LE(ulps(fused_pdf_product(1.0, 2.0), kFused12), 4.0);
}

TEST(FusedPdfProduct, WithinFourUlpOfExtendedNaiveProduct) {
  for (double a = -20.0; a <= 20.0; a += 0.37) {
    for (double b = -20.0; b <= 20.0; b += 0.41) {
      const long double la = a;
      const long double lb = b;
      const long double naive = normal_pdf(la) * normal_pdf(lb) * std::exp(-la * lb);
      if (naive < static_cast<long double>(std::numeric_limits<double>::min())) continue;
      EXPECT_LE(ulps(fused_pdf_product(a, b), static_cast<double>(naive)), 4.0) << a << ' ' << b;
    }
  }
}

TEST(ExpTimesNormalCdf, MatchesProductWhereRepresentable) {
  EXPECT_NEAR(exp_times_normal_cdf(-2.0, 0.3), std::exp(-2.0) * normal_cdf(0.3), 1e-16);
  // e^{800} Phi(-40) is representable although neither factor is.
  EXPECT_NEAR(exp_times_normal_cdf(800.0, -40.0), std::exp(800.0 - 804.60844201375378817), 1e-14);
  EXPECT_EQ(exp_times_normal_cdf(5.0, -std::numeric_limits<double>::infinity()), 0.0);
}

}  // namespace
}  // namespace slepian
