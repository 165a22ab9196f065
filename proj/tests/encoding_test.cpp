// Copyright 2026 The expq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "expq/encoding.hpp"
#include "expq/rng.hpp"

namespace expq {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Alpha0, AsWrittenIsIdenticallyZero) {
  EXPECT_EQ(alpha0(0, 6, Alpha0Variant::AsWritten), 0.0);
  EXPECT_EQ(alpha0(6, 6, Alpha0Variant::AsWritten), 0.0);
  for (int m = 0; m < 20; ++m) {
    for (int q = 0; q <= m; ++q) EXPECT_EQ(alpha0(q, m, Alpha0Variant::AsWritten), 0.0);
  }
}

TEST(Alpha0, NaturalLog) {
  EXPECT_NEAR(alpha0(0, 6, Alpha0Variant::NaturalLog), -0.00572679568688264, 1e-15);
}

TEST(Rf, PlateauCenters) {
  const auto spec = EncodingSpec::rf(6);
  EXPECT_EQ(rf(kPi / 2, 0, spec), 0.0);
  EXPECT_NEAR(rf(3 * kPi / 2, 0, spec), 1.0, 1e-12);
  EXPECT_NEAR(rf(0.0, 0, spec), 0.36787944117144233, 1e-15);
}

TEST(Rf, InnerExponentMatchesLargeValue) {
  // 2^6 * sin(pi/2) is the exponent; its exponential is the number that
  // sends the outer exp to zero.
  const RfTrace t = rf_trace(kPi / 2, 0, EncodingSpec::rf(6));
  EXPECT_DOUBLE_EQ(t.inner, 64.0);
  EXPECT_NEAR(std::exp(t.inner), 6.2351490808116169e27, 6.2351490808116169e27 * 1e-14);
  EXPECT_FALSE(t.clamped);
  EXPECT_EQ(t.value, 0.0);
}

TEST(Rf, ClampKeepsLargeMFinite) {
  const auto spec = EncodingSpec::rf(127);
  const RfTrace up = rf_trace(kPi / 2, 0, spec);
  EXPECT_TRUE(up.clamped);
  EXPECT_FALSE(std::isfinite(std::exp(up.inner)));
  EXPECT_EQ(up.value, 0.0);
  const RfTrace down = rf_trace(3 * kPi / 2, 0, spec);
  EXPECT_TRUE(down.clamped);
  EXPECT_EQ(down.value, 1.0);
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double v = rf(rng.uniform(0.0, kTwoPi), static_cast<int>(rng.below(8)), spec);
    ASSERT_TRUE(std::isfinite(v));
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
}

TEST(Rf, M64InnerExponentIsTwoToThe64) {
  const RfTrace t = rf_trace(kPi / 2, 0, EncodingSpec::rf(64));
  EXPECT_DOUBLE_EQ(t.inner, 18446744073709551616.0);
  EXPECT_TRUE(std::isinf(std::exp(t.inner)));
  EXPECT_EQ(t.value, 0.0);
}

TEST(Rf, RejectsQAboveM) {
  EXPECT_THROW(rf(0.0, 7, EncodingSpec::rf(6)), std::invalid_argument);
  EXPECT_THROW(rf(0.0, -1, EncodingSpec::rf(6)), std::invalid_argument);
}

TEST(Sawtooth, Examples) {
  EXPECT_NEAR(sawtooth(kPi / 2, 0), 0.5, 1e-15);
  EXPECT_NEAR(sawtooth(kPi, 0), 1.0, 1e-15);
  EXPECT_NEAR(sawtooth(3 * kPi / 2, 0), 1.5, 1e-15);
  EXPECT_EQ(sawtooth(0.0, 0), 0.0);
  EXPECT_THROW(sawtooth(0.0, -1), std::invalid_argument);
}

TEST(Sawtooth, PeriodShrinksWithQ) {
  for (int q = 0; q < 5; ++q) {
    const double period = std::ldexp(kPi, 1 - q);
    for (double a : {0.1, 0.7, 1.3}) {
      const double x = a * period / 2.0;
      EXPECT_NEAR(sawtooth(x, q), sawtooth(x + period, q), 1e-9);
    }
  }
}

TEST(RfPrime, Examples) {
  EXPECT_EQ(rf_prime(kPi / 2, 0), 0.0);
  EXPECT_EQ(rf_prime(3 * kPi / 2, 0), 1.0);
  EXPECT_EQ(rf_prime(3 * kPi / 4, 1), 1.0);
}

TEST(RfPrime, MatchesFloorOfSawtoothAwayFromTransitions) {
  for (int q = 0; q <= 3; ++q) {
    const double step = std::ldexp(kPi, -q);  // floor(sawtooth) changes every step
    for (int i = 0; i < 20000; ++i) {
      const double a = kTwoPi * i / 20000.0;
      const double phase = std::fmod(a, step);
      if (phase < 0.05 || step - phase < 0.05) continue;
      ASSERT_LT(std::abs(rf_prime(a, q) - std::floor(sawtooth(a, q))), 0.01) << a << " q=" << q;
    }
  }
}

TEST(RfPrime, BoundedIntermediates) {
  Rng rng(11);
  for (int i = 0; i < 100000; ++i) {
    const RfPrimeTrace t = rf_prime_trace(rng.uniform(-50.0, 50.0), static_cast<int>(rng.below(128)));
    ASSERT_TRUE(std::isfinite(t.s_bar) && std::isfinite(t.step) && std::isfinite(t.value));
    ASSERT_GE(t.s_bar, 0.0);
    ASSERT_LE(t.s_bar, 2.0);
    ASSERT_LE(std::abs(t.step), 2.0);
    ASSERT_GE(t.value, 0.0);
    ASSERT_LE(t.value, 1.0);
  }
}

TEST(Encoding, PlateauAgreement) {
  const auto rf6 = EncodingSpec::rf(6);
  for (double a : {kPi / 2, 3 * kPi / 2}) {
    EXPECT_EQ(std::round(rf(a, 0, rf6)), std::round(rf_prime(a, 0)));
  }
}

TEST(Encoding, BlockEnumeratesAllWords) {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& spec : {EncodingSpec::rf_prime(), EncodingSpec::rf(d + 6)}) {
      std::set<std::vector<int>> words;
      for (int t = 0; t < (1 << d); ++t) {
        const double a = std::ldexp((2.0 * t + 1.0) * kPi, -d);
        std::vector<int> word;
        for (int q = 0; q < d; ++q) {
          const double v = encode(a, q, spec);
          ASSERT_TRUE(std::abs(v) < 1e-12 || std::abs(v - 1.0) < 1e-12)
              << "d=" << d << " t=" << t << " q=" << q << " v=" << v;
          word.push_back(static_cast<int>(std::round(v)));
          EXPECT_EQ(word.back(), (t >> (d - 1 - q)) & 1);
        }
        words.insert(word);
      }
      EXPECT_EQ(words.size(), std::size_t{1} << d);
    }
  }
}

TEST(Layout, FullAndCompact) {
  const auto full = EncodingLayout::full(5);
  EXPECT_TRUE(full.is_full());
  EXPECT_EQ(full.n_variables(), 4u);
  EXPECT_EQ(full.n_qubits(), 3u);
  EXPECT_EQ(full.dimension(), 8u);

  const auto compact = EncodingLayout::compact(8, 3);
  EXPECT_FALSE(compact.is_full());
  ASSERT_EQ(compact.blocks().size(), 3u);
  EXPECT_EQ(compact.blocks()[0].q_values, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(compact.blocks()[1].q_values, (std::vector<int>{0, 1}));
  EXPECT_EQ(compact.blocks()[2].q_values, (std::vector<int>{0, 1}));
  EXPECT_EQ(compact.n_spins(), 7u);
  EXPECT_EQ(compact.n_qubits(), 3u);

  EXPECT_THROW(EncodingLayout::compact(8, 0), std::invalid_argument);
  EXPECT_THROW(EncodingLayout::compact(8, 8), std::invalid_argument);
  EXPECT_THROW(EncodingLayout::from_block_sizes(4, {1, 1}), std::invalid_argument);
  EXPECT_EQ(EncodingLayout::qubits_for(1), 0u);
  EXPECT_EQ(EncodingLayout::qubits_for(16), 4u);
  EXPECT_EQ(EncodingLayout::qubits_for(17), 5u);
}

TEST(BuildDiagonal, Examples) {
  const auto layout = EncodingLayout::full(3);
  const std::vector<double> angles{kPi / 2, 3 * kPi / 2};
  const auto u = build_diagonal(angles, layout, EncodingSpec::rf_prime());
  ASSERT_EQ(u.size(), 4u);
  EXPECT_EQ(u[0], std::complex<double>(1.0, 0.0));
  EXPECT_NEAR(u[1].real(), -1.0, 1e-15);
  EXPECT_NEAR(u[1].imag(), 0.0, 1e-15);
  EXPECT_EQ(u[2], std::complex<double>(1.0, 0.0));
  EXPECT_EQ(u[3], std::complex<double>(1.0, 0.0));

  EXPECT_EQ(spins_from_angles(angles, layout, EncodingSpec::rf_prime()), (std::vector<int>{1, -1, 1}));
  EXPECT_THROW(build_diagonal(std::vector<double>{1.0}, layout, EncodingSpec::rf_prime()),
               std::invalid_argument);
  EXPECT_THROW(build_diagonal(angles, layout, EncodingSpec::rf(2)), std::invalid_argument);
}

TEST(BuildDiagonal, AllPlusAngles) {
  const std::vector<double> full_angles(8, kPi / 2);
  const auto full = build_diagonal(full_angles, EncodingLayout::full(9), EncodingSpec::rf_prime());
  for (const auto& e : full.entries) EXPECT_EQ(e, std::complex<double>(1.0, 0.0));

  // Entry q follows floor(2^q alpha / pi) mod 2, which is 1 at q = 1.
  const auto layout = EncodingLayout::compact(9, 3);
  const std::vector<double> angles(3, kPi / 2);
  const auto u = build_diagonal(angles, layout, EncodingSpec::rf_prime());
  std::size_t j = 0;
  for (const auto& block : layout.blocks()) {
    for (int q : block.q_values) {
      const double expected = q == 1 ? -1.0 : 1.0;
      EXPECT_NEAR(u[j].real(), expected, 1e-12) << j;
      ++j;
    }
  }
  for (; j < u.size(); ++j) EXPECT_EQ(u[j], std::complex<double>(1.0, 0.0));
}

TEST(BuildDiagonal, UnitModulusAndGaugeSpin) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t nodes = 2 + rng.below(10);
    const auto layout = EncodingLayout::compact(nodes, 1 + rng.below(nodes - 1));
    std::vector<double> angles(layout.n_variables());
    for (double& a : angles) a = rng.uniform(0.0, kTwoPi);
    for (const auto& spec : {EncodingSpec::rf_prime(), EncodingSpec::rf(default_rf_m(nodes))}) {
      const auto u = build_diagonal(angles, layout, spec);
      for (const auto& e : u.entries) ASSERT_NEAR(std::abs(e), 1.0, 1e-12);
      for (std::size_t j = nodes - 1; j < u.size(); ++j) ASSERT_EQ(u[j], std::complex<double>(1.0, 0.0));
      EXPECT_EQ(spins_from_angles(angles, layout, spec).back(), 1);
    }
  }
}

TEST(BuildDiagonal, PlateauCentersGiveExactSpins) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t nodes = 2 + rng.below(9);
    const auto layout = rng.bernoulli(0.5) ? EncodingLayout::full(nodes)
                                           : EncodingLayout::compact(nodes, 1 + rng.below(nodes - 1));
    std::vector<int> spins(nodes, 1);
    for (std::size_t j = 0; j + 1 < nodes; ++j) spins[j] = rng.bernoulli(0.5) ? 1 : -1;
    const auto angles = angles_for_spins(spins, layout);
    for (const auto& spec : {EncodingSpec::rf_prime(), EncodingSpec::rf(default_rf_m(nodes))}) {
      const auto u = build_diagonal(angles, layout, spec);
      for (std::size_t j = 0; j + 1 < nodes; ++j) {
        ASSERT_NEAR(u[j].real(), spins[j], 1e-12);
        ASSERT_NEAR(u[j].imag(), 0.0, 1e-12);
      }
      EXPECT_EQ(spins_from_angles(angles, layout, spec), spins);
    }
  }
}

}  // namespace
}  // namespace expq
