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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "expq/generators.hpp"
#include "expq/tsp.hpp"

namespace expq {
namespace {

BitVector permutation_bits(const std::vector<std::size_t>& tour) {
  const std::size_t n = tour.size();
  BitVector x(n * n, 0);
  for (std::size_t p = 0; p < n; ++p) x[tsp_variable(tour[p], p, n)] = 1;
  return x;
}

double best_tour(const Matrix& d) {
  std::vector<std::size_t> perm(static_cast<std::size_t>(d.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do best = std::min(best, tour_length(d, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(TspFeasible, Examples) {
  EXPECT_TRUE(tsp_feasible(permutation_bits({0, 1, 2}), 3));
  EXPECT_FALSE(tsp_feasible(BitVector(9, 0), 3));
  BitVector x = permutation_bits({0, 1, 2});
  x[tsp_variable(0, 1, 3)] = 1;
  EXPECT_FALSE(tsp_feasible(x, 3));
  EXPECT_THROW(tsp_feasible(BitVector(8, 0), 3), std::invalid_argument);
}

TEST(TspDecode, RoundTrip) {
  const std::vector<std::size_t> tour{2, 0, 3, 1};
  const auto decoded = tsp_decode(permutation_bits(tour), 4);
  ASSERT_TRUE(decoded.has_value());
  EXPECT_EQ(*decoded, tour);
  EXPECT_FALSE(tsp_decode(BitVector(16, 0), 4).has_value());
}

TEST(TspQubo, ThreeCityToursAllEqual) {
  const TspInstance t = random_tsp(3, 7);
  const TspQubo tq = tsp_qubo(t);
  const double cycle = t.distances(0, 1) + t.distances(1, 2) + t.distances(0, 2);
  std::vector<std::size_t> perm{0, 1, 2};
  do {
    const BitVector x = permutation_bits(perm);
    EXPECT_NEAR(tour_length(t.distances, *tq.decode(x)), cycle, 1e-12);
    EXPECT_NEAR(qubo_energy(tq.qubo, x), t.penalty_b * cycle + tq.offset, 1e-9);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(TspQubo, FeasibleEnergiesAndFeasibleGroundState) {
  for (std::size_t n : {3u, 4u}) {
    const TspInstance t = random_tsp(n, 20 + n);
    const TspQubo tq = tsp_qubo(t);
    const std::size_t nv = n * n;
    double best_feasible = std::numeric_limits<double>::infinity();
    double best_infeasible = std::numeric_limits<double>::infinity();
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << nv); ++idx) {
      const BitVector x = bits_from_index(idx, nv);
      const double e = qubo_energy(tq.qubo, x);
      if (tsp_feasible(x, n)) {
        ASSERT_NEAR(e, t.penalty_b * tour_length(t.distances, *tq.decode(x)) + tq.offset, 1e-9);
        best_feasible = std::min(best_feasible, e);
      } else {
        best_infeasible = std::min(best_infeasible, e);
      }
    }
    EXPECT_GT(best_infeasible, best_feasible) << "n=" << n;
  }
}

TEST(TspQubo, StrongPenaltySeparatesEveryAssignment) {
  // With A > n * max(d), every infeasible assignment costs more than every
  // feasible one.
  TspInstance t = random_tsp(4, 24);
  t.penalty_a = 1.0 + std::ceil(4.0 * t.distances.maxCoeff());
  const TspQubo tq = tsp_qubo(t);
  double worst_feasible = -std::numeric_limits<double>::infinity();
  double best_infeasible = std::numeric_limits<double>::infinity();
  for (std::uint64_t idx = 0; idx < (1u << 16); ++idx) {
    const BitVector x = bits_from_index(idx, 16);
    const double e = qubo_energy(tq.qubo, x);
    if (tsp_feasible(x, 4)) {
      worst_feasible = std::max(worst_feasible, e);
    } else {
      best_infeasible = std::min(best_infeasible, e);
    }
  }
  EXPECT_GT(best_infeasible, worst_feasible);
}

TEST(TspQubo, FourCityArgminIsOptimalTour) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const TspInstance t = random_tsp(4, seed);
    const TspQubo tq = tsp_qubo(t);
    double best = std::numeric_limits<double>::infinity();
    BitVector arg;
    for (std::uint64_t idx = 0; idx < (1u << 16); ++idx) {
      const BitVector x = bits_from_index(idx, 16);
      const double e = qubo_energy(tq.qubo, x);
      if (e < best) {
        best = e;
        arg = x;
      }
    }
    const auto tour = tq.decode(arg);
    ASSERT_TRUE(tour.has_value());
    EXPECT_NEAR(tour_length(t.distances, *tour), best_tour(t.distances), 1e-9);
  }
}

TEST(TspInstance, ValidateRejectsWeakPenalty) {
  TspInstance t = random_tsp(4, 1);
  t.penalty_a = t.distances.maxCoeff() * 0.5;
  EXPECT_THROW(t.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace expq
