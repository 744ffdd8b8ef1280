#include "slepian/oracle.hpp"

#include <cmath>
#include <ostream>

#include <boost/random/normal_distribution.hpp>

#include "slepian/errors.hpp"
#include "slepian/parallel.hpp"
#include "slepian/random.hpp"

namespace slepian {

void OracleConfig::validate() const {
  if (grid_steps < 256) throw InvalidInput("path oracle needs at least 256 grid steps");
  if (grid_steps % 2 != 0) throw InvalidInput("path oracle grid_steps must be even");
  if (n_paths < 1) throw InvalidInput("path oracle needs at least one path");
}

namespace {

using Normal = boost::random::normal_distribution<double>;

constexpr std::uint64_t kPathsPerBatch = 1024;

OracleEstimate make_estimate(std::uint64_t fine, std::uint64_t coarse, const OracleConfig& cfg) {
  OracleEstimate e;
  const double n = static_cast<double>(cfg.n_paths);
  e.n_paths = cfg.n_paths;
  e.grid_steps = cfg.grid_steps;
  e.seed = cfg.seed;
  e.p_hat = static_cast<double>(fine) / n;
  e.se = std::sqrt(e.p_hat * (1.0 - e.p_hat) / n);
  e.p_hat_coarse = static_cast<double>(coarse) / n;
  e.se_coarse = std::sqrt(e.p_hat_coarse * (1.0 - e.p_hat_coarse) / n);
  return e;
}

// Runs worker(index, fine, coarse) for every path, where the spans receive one
// success flag per outcome. make_worker() is called once per batch so workers
// can own scratch buffers.
template <typename MakeWorker>
std::vector<OracleEstimate> run_oracle(const OracleConfig& cfg, std::size_t outcomes,
                                       MakeWorker&& make_worker) {
  cfg.validate();
  const std::uint64_t batches = (cfg.n_paths + kPathsPerBatch - 1) / kPathsPerBatch;
  std::vector<std::vector<std::uint64_t>> partial(batches);

  parallel_for(batches, cfg.threads, [&](std::uint64_t b) {
    auto worker = make_worker();
    std::vector<std::uint64_t> counts(2 * outcomes, 0);
    std::vector<char> fine(outcomes);
    std::vector<char> coarse(outcomes);
    const std::uint64_t end = std::min(cfg.n_paths, (b + 1) * kPathsPerBatch);
    for (std::uint64_t i = b * kPathsPerBatch; i < end; ++i) {
      worker(i, std::span<char>(fine), std::span<char>(coarse));
      for (std::size_t k = 0; k < outcomes; ++k) {
        counts[2 * k] += fine[k] ? 1 : 0;
        counts[2 * k + 1] += coarse[k] ? 1 : 0;
      }
    }
    partial[b] = std::move(counts);
  });

  std::vector<OracleEstimate> out;
  for (std::size_t k = 0; k < outcomes; ++k) {
    std::uint64_t fine = 0;
    std::uint64_t coarse = 0;
    for (const auto& counts : partial) {
      fine += counts[2 * k];
      coarse += counts[2 * k + 1];
    }
    out.push_back(make_estimate(fine, coarse, cfg));
  }
  return out;
}

// Per-step coefficients of the bridge draw below, shared by all paths.
struct WalkTable {
  explicit WalkTable(int steps) : drift(steps), spread(steps), sqrt_h(std::sqrt(1.0 / steps)) {
    const double h = 1.0 / steps;
    for (int j = 0; j < steps; ++j) {
      const double tau = 1.0 - j * h;
      const bool last = (j == steps - 1);
      drift[j] = last ? 1.0 : h / tau;
      spread[j] = last ? 0.0 : std::sqrt(h * (tau - h) / tau);
    }
  }
  std::vector<double> drift;
  std::vector<double> spread;
  double sqrt_h;
};

// Walks S(t_j) = B(t_j + 1) - B(t_j) forward one grid step at a time. B(1)
// is drawn first; the increments of B on [0, 1] are then drawn sequentially
// from the bridge pinned at B(1), so a path that stops early pays only for
// the steps it used.
class SlepianWalk {
 public:
  SlepianWalk(const WalkTable& table, std::uint64_t seed, std::uint64_t index)
      : table_(table), stream_(seed, index, kStreamSlepianPath) {
    value_ = normal_(stream_);
    remaining_ = value_;
  }

  double value() const noexcept { return value_; }

  // Moves from t_j to t_{j+1}.
  void advance(int j) {
    double xi = remaining_ * table_.drift[j];
    if (table_.spread[j] > 0.0) xi += table_.spread[j] * normal_(stream_);
    remaining_ -= xi;
    value_ += table_.sqrt_h * normal_(stream_) - xi;
  }

 private:
  const WalkTable& table_;
  PhiloxStream stream_;
  Normal normal_;
  double value_;
  double remaining_;  // B(1) - B(t_j)
};

}  // namespace

PathSample slepian_path(std::uint64_t seed, std::uint64_t index, int grid_steps) {
  const WalkTable table(grid_steps);
  SlepianWalk walk(table, seed, index);
  PathSample path;
  path.grid = Eigen::VectorXd::LinSpaced(grid_steps + 1, 0.0, 1.0);
  path.values.resize(grid_steps + 1);
  for (int j = 0; j <= grid_steps; ++j) {
    path.values[j] = walk.value();
    if (j < grid_steps) walk.advance(j);
  }
  return path;
}

void simulate_slepian(std::uint64_t n_paths, int grid_steps, std::uint64_t seed,
                      const std::function<void(std::uint64_t, const PathSample&)>& visit) {
  OracleConfig{n_paths, grid_steps, seed, 1}.validate();
  for (std::uint64_t i = 0; i < n_paths; ++i) visit(i, slepian_path(seed, i, grid_steps));
}

PathSample z_path(double x, std::uint64_t seed, std::uint64_t index, int grid_steps) {
  PhiloxStream stream(seed, index, kStreamZPath);
  Normal normal;
  PathSample path;
  path.grid = Eigen::VectorXd::LinSpaced(grid_steps + 1, 0.0, 1.0);
  path.values.resize(grid_steps + 1);
  double b = 0.0;
  double clock = 0.0;
  for (int j = 0; j <= grid_steps; ++j) {
    const double t = path.grid[j];
    const double u = t / (2.0 - t);
    if (j > 0) b += std::sqrt(u - clock) * normal(stream);
    clock = u;
    path.values[j] = (2.0 - t) * b + (1.0 - t) * x;
  }
  return path;
}

void simulate_z(double x, std::uint64_t n_paths, int grid_steps, std::uint64_t seed,
                const std::function<void(std::uint64_t, const PathSample&)>& visit) {
  OracleConfig{n_paths, grid_steps, seed, 1}.validate();
  for (std::uint64_t i = 0; i < n_paths; ++i) visit(i, z_path(x, seed, i, grid_steps));
}

std::vector<OracleEstimate> oracle_ncp_many(std::span<const Boundary> boundaries,
                                            const OracleConfig& cfg) {
  cfg.validate();
  const int steps = cfg.grid_steps;
  const std::size_t m = boundaries.size();
  const WalkTable table(steps);
  // levels[j * m + k] = f_k(t_j)
  std::vector<double> levels((steps + 1) * m);
  for (int j = 0; j <= steps; ++j)
    for (std::size_t k = 0; k < m; ++k)
      levels[j * m + k] = evaluate(boundaries[k], static_cast<double>(j) / steps);

  return run_oracle(cfg, m, [&] {
    return [&](std::uint64_t index, std::span<char> fine,
                                              std::span<char> coarse) {
      std::fill(fine.begin(), fine.end(), 1);
      std::fill(coarse.begin(), coarse.end(), 1);
      std::size_t alive = m;  // boundaries not yet crossed on the coarse grid
      SlepianWalk walk(table, cfg.seed, index);
      for (int j = 0; j <= steps && alive > 0; ++j) {
        const double s = walk.value();
        const double* f = &levels[j * m];
        const bool on_coarse = (j % 2 == 0);
        for (std::size_t k = 0; k < m; ++k) {
          if (s > f[k]) {
            fine[k] = 0;
            if (on_coarse && coarse[k]) {
              coarse[k] = 0;
              --alive;
            }
          }
        }
        if (j < steps) walk.advance(j);
      }
    };
  });
}

OracleEstimate oracle_ncp(const Boundary& f, const OracleConfig& cfg) {
  return oracle_ncp_many(std::span<const Boundary>(&f, 1), cfg).front();
}

OracleEstimate oracle_zero_hitting(const OracleConfig& cfg) {
  cfg.validate();
  const int steps = cfg.grid_steps;
  const WalkTable table(steps);
  return run_oracle(cfg, 1, [&] {
    return [&](std::uint64_t index, std::span<char> fine,
                                              std::span<char> coarse) {
      bool pos = false, neg = false, zero = false;
      bool pos_c = false, neg_c = false, zero_c = false;
      SlepianWalk walk(table, cfg.seed, index);
      for (int j = 0; j <= steps; ++j) {
        const double s = walk.value();
        pos |= s > 0.0;
        neg |= s < 0.0;
        zero |= s == 0.0;
        if (j % 2 == 0) {
          pos_c |= s > 0.0;
          neg_c |= s < 0.0;
          zero_c |= s == 0.0;
          if ((pos_c && neg_c) || zero_c) break;
        }
        if (j < steps) walk.advance(j);
      }
      fine[0] = (pos && neg) || zero;
      coarse[0] = (pos_c && neg_c) || zero_c;
    };
  }).front();
}

OracleEstimate oracle_brownian_ncp(double a, double b, double T, const OracleConfig& cfg) {
  if (!(T > 0.0)) throw InvalidInput("Brownian oracle horizon must be positive");
  const int steps = cfg.grid_steps;
  const double dt = T / steps;
  return run_oracle(cfg, 1, [&] {
    return [&](std::uint64_t index, std::span<char> fine, std::span<char> coarse) {
      PhiloxStream stream(cfg.seed, index, kStreamBrownianPath);
      Normal normal(0.0, std::sqrt(dt));
      fine[0] = coarse[0] = 1;
      double w = 0.0;
      for (int j = 0; j <= steps; ++j) {
        if (j > 0) w += normal(stream);
        if (w > a + b * j * dt) {
          fine[0] = 0;
          if (j % 2 == 0) {
            coarse[0] = 0;
            break;
          }
        }
      }
    };
  }).front();
}

OracleEstimate oracle_bridge_noncrossing(double u0, double u1, double c0, double c1, double dt,
                                         const OracleConfig& cfg) {
  if (!(dt > 0.0)) throw InvalidInput("bridge duration must be positive");
  const int steps = cfg.grid_steps;
  const double h = dt / steps;
  return run_oracle(cfg, 1, [&] {
    return [&](std::uint64_t index, std::span<char> fine, std::span<char> coarse) {
      PhiloxStream stream(cfg.seed, index, kStreamBridgePath);
      Normal normal;
      fine[0] = coarse[0] = (u0 <= c0 && u1 <= c1) ? 1 : 0;
      if (!fine[0]) return;
      double y = u0;
      for (int j = 1; j < steps; ++j) {
        // Exact bridge step from time (j-1)h to jh towards u1 at dt.
        const double remaining = dt - (j - 1) * h;
        y += (u1 - y) * h / remaining + std::sqrt(h * (remaining - h) / remaining) * normal(stream);
        const double chord = c0 + (c1 - c0) * (j * h) / dt;
        if (y > chord) {
          fine[0] = 0;
          if (j % 2 == 0) {
            coarse[0] = 0;
            break;
          }
        }
      }
    };
  }).front();
}

void write_paths_csv(std::ostream& out, std::span<const PathSample> paths) {
  out << "path,t,value\n";
  const auto precision = out.precision(17);
  for (std::size_t p = 0; p < paths.size(); ++p)
    for (Eigen::Index j = 0; j < paths[p].grid.size(); ++j)
      out << p << ',' << paths[p].grid[j] << ',' << paths[p].values[j] << '\n';
  out.precision(precision);
}

}  // namespace slepian
