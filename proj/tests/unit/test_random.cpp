#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "slepian/random.hpp"

namespace slepian {
namespace {

// Known-answer vectors of the Random123 reference implementation.
TEST(Philox4x32, KnownAnswers) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}), (PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox4x32, UsableAtCompileTime) {
  constexpr PhiloxCounter r = philox4x32({0, 0, 0, 0}, {0, 0});
  static_assert(r[0] == 0x6627e8d5);
}

TEST(OpenUnit, NeverHitsEndpoints) {
  EXPECT_GT(to_open_unit(0), 0.0);
  EXPECT_LT(to_open_unit(~std::uint64_t{0}), 1.0);
}

TEST(PhiloxStream, ReproducibleAndDistinctAcrossKeys) {
  PhiloxStream a(5, 17, kStreamSlepianPath), b(5, 17, kStreamSlepianPath);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());

  std::set<std::uint64_t> firsts;
  for (std::uint64_t seed : {1ull, 2ull})
    for (std::uint64_t index : {0ull, 1ull, 1ull << 33})
      for (std::uint32_t stream : {kStreamMonteCarlo, kStreamSlepianPath}) firsts.insert(PhiloxStream(seed, index, stream)());
  EXPECT_EQ(firsts.size(), 12u);
}

TEST(KeyedNormalPair, Moments) {
  const int n = 200000;
  double s = 0, s2 = 0, cross = 0;
  for (int i = 0; i < n; ++i) {
    const auto [z0, z1] = keyed_normal_pair(3, i, 0, kStreamMonteCarlo);
    s += z0 + z1;
    s2 += z0 * z0 + z1 * z1;
    cross += z0 * z1;
  }
  EXPECT_NEAR(s / (2 * n), 0.0, 4 / std::sqrt(2.0 * n));
  EXPECT_NEAR(s2 / (2 * n), 1.0, 4 * std::sqrt(2.0 / (2 * n)));
  EXPECT_NEAR(cross / n, 0.0, 4 / std::sqrt(1.0 * n));
}

TEST(KeyedNormalPair, PureFunctionOfKey) {
  EXPECT_EQ(keyed_normal_pair(9, 123, 4, kStreamMonteCarlo), keyed_normal_pair(9, 123, 4, kStreamMonteCarlo));
  EXPECT_NE(keyed_normal_pair(9, 123, 4, kStreamMonteCarlo), keyed_normal_pair(9, 123, 5, kStreamMonteCarlo));
}

}  // namespace
}  // namespace slepian
