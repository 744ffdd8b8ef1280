#pragma once

// Counter-based random numbers (Philox4x32-10, Salmon et al. 2011). A draw is
// a pure function of (seed, counter), so any sample or path can be regenerated
// by index, independent of batching or thread schedule.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>

namespace slepian {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

constexpr PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) noexcept {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

constexpr PhiloxKey philox_key(std::uint64_t seed) noexcept {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

/// Uniform in (0, 1) from 64 random bits, 53-bit resolution, never 0 or 1.
constexpr double to_open_unit(std::uint64_t bits) noexcept {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

/// Two independent standard normals at (seed, stream, index, block), by Box-Muller.
inline std::pair<double, double> keyed_normal_pair(std::uint64_t seed, std::uint64_t index,
                                                   std::uint32_t block, std::uint32_t stream) {
  const PhiloxCounter r = philox4x32(
      {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), block, stream},
      philox_key(seed));
  const double u1 = to_open_unit((std::uint64_t{r[0]} << 32) | r[1]);
  const double u2 = to_open_unit((std::uint64_t{r[2]} << 32) | r[3]);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// UniformRandomBitGenerator producing the Philox stream for one (seed, index)
/// pair, e.g. one simulated path. Successive blocks advance the high counter words.
class PhiloxStream {
 public:
  using result_type = std::uint64_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t index, std::uint32_t stream = 0) noexcept
      : key_(philox_key(seed)),
        index_lo_(static_cast<std::uint32_t>(index)),
        index_hi_(static_cast<std::uint32_t>(index >> 32)),
        stream_(stream) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const PhiloxCounter r = philox4x32({index_lo_, index_hi_, block_++, stream_}, key_);
    spare_ = (std::uint64_t{r[2]} << 32) | r[3];
    have_spare_ = true;
    return (std::uint64_t{r[0]} << 32) | r[1];
  }

 private:
  PhiloxKey key_;
  std::uint32_t index_lo_;
  std::uint32_t index_hi_;
  std::uint32_t stream_;
  std::uint32_t block_ = 0;
  std::uint64_t spare_ = 0;
  bool have_spare_ = false;
};

/// Stream tags separating independent uses of the same seed.
enum StreamTag : std::uint32_t {
  kStreamMonteCarlo = 0x4D43u,
  kStreamSlepianPath = 0x534Cu,
  kStreamZPath = 0x5A50u,
  kStreamBrownianPath = 0x4250u,
  kStreamBridgePath = 0x4252u,
  kStreamQmcShift = 0x5153u,
};

}  // namespace slepian
