#pragma once

// Monte Carlo ground truth from simulated paths. S(t) = B(t + 1) - B(t) is
// built from an exact Brownian path on [0, 2]; the non-crossing frequency is
// checked at grid points only, so it is biased upward by missed crossings.
// Every estimate is also reported on the half-resolution grid (every other
// point of the same paths) to expose that bias.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "slepian/boundary.hpp"
#include "slepian/defaults.hpp"

namespace slepian {

struct PathSample {
  Eigen::VectorXd grid;
  Eigen::VectorXd values;
};

struct OracleConfig {
  std::uint64_t n_paths = defaults::kOraclePaths;
  int grid_steps = defaults::kOracleSteps;  ///< >= 256, even
  std::uint64_t seed = defaults::kSeed;
  int threads = defaults::kThreads;

  void validate() const;
};

struct OracleEstimate {
  double p_hat = 0.0;
  double se = 0.0;  ///< sqrt(p_hat (1 - p_hat) / n_paths)
  std::uint64_t n_paths = 0;
  int grid_steps = 0;
  std::uint64_t seed = 0;
  double p_hat_coarse = 0.0;  ///< same paths on grid_steps / 2 points
  double se_coarse = 0.0;
};

/// Slepian path `index` on the grid j / grid_steps, j = 0..grid_steps.
PathSample slepian_path(std::uint64_t seed, std::uint64_t index, int grid_steps);

void simulate_slepian(std::uint64_t n_paths, int grid_steps, std::uint64_t seed,
                      const std::function<void(std::uint64_t, const PathSample&)>& visit);

/// Path `index` of Z_t = (2 - t) B(t / (2 - t)) + (1 - t) x on j / grid_steps.
PathSample z_path(double x, std::uint64_t seed, std::uint64_t index, int grid_steps);

void simulate_z(double x, std::uint64_t n_paths, int grid_steps, std::uint64_t seed,
                const std::function<void(std::uint64_t, const PathSample&)>& visit);

/// Frequency of S(t_j) <= f(t_j) at every grid point.
OracleEstimate oracle_ncp(const Boundary& f, const OracleConfig& cfg = {});

/// oracle_ncp for several boundaries over the same paths.
std::vector<OracleEstimate> oracle_ncp_many(std::span<const Boundary> boundaries,
                                            const OracleConfig& cfg = {});

/// Frequency of paths on which S takes both signs (or hits 0) on the grid.
OracleEstimate oracle_zero_hitting(const OracleConfig& cfg = {});

/// Frequency of a Brownian motion staying below a + b t on [0, T].
OracleEstimate oracle_brownian_ncp(double a, double b, double T, const OracleConfig& cfg = {});

/// Frequency of a Brownian bridge from value u0 to u1 over duration dt staying
/// below the chord from c0 to c1.
OracleEstimate oracle_bridge_noncrossing(double u0, double u1, double c0, double c1, double dt,
                                         const OracleConfig& cfg = {});

/// Rows "path,t,value".
void write_paths_csv(std::ostream& out, std::span<const PathSample> paths);

}  // namespace slepian
