#include <cmath>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "slepian/closedform.hpp"
#include "slepian/errors.hpp"
#include "slepian/integrate.hpp"

namespace slepian {
namespace {

const PiecewiseLinearBoundary kZero({{0, 0}, {1, 0}});
const PiecewiseLinearBoundary kThree({{0, 1}, {0.3, 2}, {0.7, 0.5}, {1, 1}});

McConfig samples(std::uint64_t n, Sampler sampler = Sampler::pseudo) {
  McConfig cfg;
  cfg.n_samples = n;
  cfg.sampler = sampler;
  return cfg;
}

TEST(MonteCarlo, ZeroBoundaryWithinThreeSe) {
  const auto r = piecewise_ncp_mc(kZero);
  EXPECT_EQ(r.method, Method::monte_carlo);
  EXPECT_EQ(r.err_kind, ErrorKind::std_error);
  EXPECT_EQ(r.n_evals, defaults::kSamples);
  EXPECT_LE(std::abs(r.p - constant_ncp(0).p), 3 * r.err);
}

TEST(MonteCarlo, FarBoundaryIsOneWithZeroSe) {
  const auto r = piecewise_ncp_mc(PiecewiseLinearBoundary({{0, 40}, {0.5, 40}, {1, 40}}), samples(10000));
  EXPECT_EQ(r.p, 1.0);
  EXPECT_EQ(r.err, 0.0);
}

TEST(MonteCarlo, SeedDeterminismAndThreadIndependence) {
  McConfig cfg = samples(200000);
  cfg.batch = 4096;
  cfg.threads = 1;
  const auto a = piecewise_ncp_mc(kThree, cfg);
  cfg.threads = 4;
  const auto b = piecewise_ncp_mc(kThree, cfg);
  EXPECT_EQ(a.p, b.p);
  EXPECT_EQ(a.err, b.err);
  ASSERT_TRUE(a.seed.has_value());
  EXPECT_EQ(*a.seed, cfg.seed);
  cfg.seed += 1;
  EXPECT_NE(piecewise_ncp_mc(kThree, cfg).p, a.p);
}

TEST(MonteCarlo, StandardErrorScaling) {
  const double se4 = piecewise_ncp_mc(kZero, samples(10000)).err;
  const double se5 = piecewise_ncp_mc(kZero, samples(100000)).err;
  const double se6 = piecewise_ncp_mc(kZero, samples(1000000)).err;
  EXPECT_NEAR(se4 / se5, std::sqrt(10.0), 0.2 * std::sqrt(10.0));
  EXPECT_NEAR(se5 / se6, std::sqrt(10.0), 0.2 * std::sqrt(10.0));
}

TEST(MonteCarlo, AgreesWithQuadratureOnCorpus) {
  for (const auto& c : testing::regression_corpus()) {
    const auto q = piecewise_ncp_quadrature(c.boundary);
    const auto m = piecewise_ncp_mc(c.boundary, samples(400000));
    EXPECT_LE(std::abs(q.p - m.p), 3 * m.err + defaults::kQuadratureAbsTol) << c.name;
  }
}

TEST(MonteCarlo, MonotoneInKnotValuesWithCommonRandomNumbers) {
  const McConfig cfg = samples(100000);
  const auto base = kThree.knots();
  const double p0 = piecewise_ncp_mc(kThree, cfg).p;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto raised = base;
    raised[i].c += 0.2;
    EXPECT_GE(piecewise_ncp_mc(PiecewiseLinearBoundary(raised), cfg).p, p0) << i;
  }
}

TEST(QuasiMonteCarlo, AgreesWithQuadratureAndIsDeterministic) {
  const McConfig cfg = samples(1 << 16, Sampler::low_discrepancy);
  for (const auto& c : testing::regression_corpus()) {
    const auto q = piecewise_ncp_quadrature(c.boundary);
    const auto r = piecewise_ncp_mc(c.boundary, cfg);
    EXPECT_EQ(r.method, Method::quasi_monte_carlo);
    EXPECT_LE(std::abs(q.p - r.p), 4 * r.err + defaults::kQuadratureAbsTol) << c.name;
  }
  EXPECT_EQ(piecewise_ncp_mc(kThree, cfg).p, piecewise_ncp_mc(kThree, cfg).p);
}

TEST(QuasiMonteCarlo, BeatsPseudoRandomError) {
  const auto pseudo = piecewise_ncp_mc(kThree, samples(1 << 16));
  const auto qmc = piecewise_ncp_mc(kThree, samples(1 << 16, Sampler::low_discrepancy));
  EXPECT_LT(qmc.err, pseudo.err);
}

TEST(McConfig, Validation) {
  McConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.n_samples = 10;
  EXPECT_THROW(cfg.validate(), InvalidInput);
  cfg = {};
  cfg.batch = 0;
  EXPECT_THROW(cfg.validate(), InvalidInput);
  cfg = {};
  cfg.qmc_replicates = 1;
  EXPECT_NO_THROW(cfg.validate());
  cfg.sampler = Sampler::low_discrepancy;
  EXPECT_THROW(cfg.validate(), InvalidInput);
}

}  // namespace
}  // namespace slepian
