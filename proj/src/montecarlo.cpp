#include <cmath>
#include <vector>

#include <boost/math/special_functions/erf.hpp>
#include <boost/random/sobol.hpp>

#include "slepian/errors.hpp"
#include "slepian/integrate.hpp"
#include "slepian/parallel.hpp"
#include "slepian/random.hpp"

namespace slepian {

void McConfig::validate() const {
  if (n_samples < 1000) throw InvalidInput("Monte Carlo needs at least 1000 samples");
  if (batch < 1) throw InvalidInput("Monte Carlo batch size must be positive");
  if (sampler == Sampler::low_discrepancy && qmc_replicates < 2)
    throw InvalidInput("low-discrepancy sampling needs at least 2 randomized replicates");
}

double mc_estimator(const ReducedBoundary& boundary, const double* normals,
                    std::vector<double>& scratch) {
  const double x = normals[0];
  if (x > boundary.start_level()) return 0.0;
  boundary_image(boundary, x, scratch);
  const auto& times = boundary.brownian_times();
  const int n = boundary.segments();
  double u = 0.0;
  double prev_gap = scratch[0];
  double product = 1.0;
  for (int i = 1; i <= n; ++i) {
    const double dt = times[i] - times[i - 1];
    u += std::sqrt(dt) * normals[i];
    const double gap = scratch[i] - u;
    if (gap < 0.0) return 0.0;
    product *= 1.0 - std::exp(-2.0 * prev_gap * gap / dt);
    prev_gap = gap;
  }
  return product;
}

namespace {

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

ProbabilityResult finish(double mean, double se, std::uint64_t evals, const McConfig& cfg) {
  ProbabilityResult out;
  out.p = std::clamp(mean, 0.0, 1.0);
  out.err = se;
  out.err_kind = ErrorKind::std_error;
  out.method = cfg.sampler == Sampler::pseudo ? Method::monte_carlo : Method::quasi_monte_carlo;
  out.n_evals = evals;
  out.seed = cfg.seed;
  return out;
}

ProbabilityResult pseudo_random(const ReducedBoundary& reduced, const McConfig& cfg) {
  const int dim = reduced.segments() + 1;
  const std::uint64_t batches = (cfg.n_samples + cfg.batch - 1) / cfg.batch;
  std::vector<Moments> partial(batches);

  parallel_for(batches, cfg.threads, [&](std::uint64_t b) {
    std::vector<double> normals(dim + 1);
    std::vector<double> scratch;
    Moments m;
    const std::uint64_t end = std::min(cfg.n_samples, (b + 1) * cfg.batch);
    for (std::uint64_t s = b * cfg.batch; s < end; ++s) {
      for (int k = 0; 2 * k < dim; ++k) {
        const auto [z0, z1] = keyed_normal_pair(cfg.seed, s, static_cast<std::uint32_t>(k),
                                                kStreamMonteCarlo);
        normals[2 * k] = z0;
        normals[2 * k + 1] = z1;
      }
      const double y = mc_estimator(reduced, normals.data(), scratch);
      m.sum += y;
      m.sum_sq += y * y;
    }
    partial[b] = m;
  });

  Moments total;
  for (const Moments& m : partial) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  const double n = static_cast<double>(cfg.n_samples);
  const double mean = total.sum / n;
  const double var = std::max(0.0, (total.sum_sq - n * mean * mean) / (n - 1.0));
  return finish(mean, std::sqrt(var / n), cfg.n_samples, cfg);
}

// Randomized QMC: independent digital shifts of one Sobol sequence. The
// standard error comes from the spread of the replicate means.
ProbabilityResult low_discrepancy(const ReducedBoundary& reduced, const McConfig& cfg) {
  const int dim = reduced.segments() + 1;
  const int replicates = cfg.qmc_replicates;
  const std::uint64_t per_replicate = cfg.n_samples / replicates;
  std::vector<double> means(replicates);

  parallel_for(replicates, cfg.threads, [&](std::uint64_t r) {
    std::vector<std::uint64_t> shift(dim);
    for (int j = 0; j < dim; ++j) {
      const PhiloxCounter bits = philox4x32(
          {static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(j), 0u, kStreamQmcShift},
          philox_key(cfg.seed));
      shift[j] = (std::uint64_t{bits[0]} << 32) | bits[1];
    }
    boost::random::sobol sequence(dim);
    std::vector<double> normals(dim);
    std::vector<double> scratch;
    double sum = 0.0;
    for (std::uint64_t k = 0; k < per_replicate; ++k) {
      for (int j = 0; j < dim; ++j) {
        const double u = to_open_unit(sequence() ^ shift[j]);
        normals[j] = -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u);
      }
      sum += mc_estimator(reduced, normals.data(), scratch);
    }
    means[r] = sum / static_cast<double>(per_replicate);
  });

  double mean = 0.0;
  for (double m : means) mean += m;
  mean /= replicates;
  double var = 0.0;
  for (double m : means) var += (m - mean) * (m - mean);
  var /= (replicates - 1);
  return finish(mean, std::sqrt(var / replicates), per_replicate * replicates, cfg);
}

}  // namespace

ProbabilityResult piecewise_ncp_mc(const PiecewiseLinearBoundary& l, const McConfig& cfg) {
  cfg.validate();
  const ReducedBoundary reduced(l);
  return cfg.sampler == Sampler::pseudo ? pseudo_random(reduced, cfg)
                                        : low_discrepancy(reduced, cfg);
}

}  // namespace slepian
