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

/// @file tabu.hpp
/// @brief Single-flip tabu search on QUBOs, the classical baseline.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "expq/optimizers/objective.hpp"
#include "expq/problems.hpp"
#include "expq/rng.hpp"

namespace expq {

/// Binary assignment with cached products r = Q x, giving O(1) flip deltas
/// and O(n) flips.
class QuboFlipState {
 public:
  QuboFlipState(const Qubo& q, BitVector x) : q_(&q), x_(std::move(x)) { recompute(); }

  /// E(x with bit i flipped) - E(x) = (1 - 2 x_i) (Q_ii + 2 (r_i - Q_ii x_i)).
  double delta(std::size_t i) const {
    const Matrix& m = q_->matrix();
    const auto ii = static_cast<Eigen::Index>(i);
    const double qii = m(ii, ii);
    const double sign = x_[i] ? -1.0 : 1.0;
    return sign * (qii + 2.0 * (r_[i] - qii * x_[i]));
  }

  void flip(std::size_t i) {
    const double d = delta(i);
    const double change = x_[i] ? -1.0 : 1.0;
    x_[i] ^= 1U;
    const Matrix& m = q_->matrix();
    for (std::size_t j = 0; j < r_.size(); ++j) {
      r_[j] += m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) * change;
    }
    energy_ += d;
  }

  void reset(BitVector x) {
    x_ = std::move(x);
    recompute();
  }

  const BitVector& bits() const { return x_; }
  double energy() const { return energy_; }
  std::size_t size() const { return x_.size(); }

 private:
  void recompute() {
    const Matrix& m = q_->matrix();
    const std::size_t n = x_.size();
    r_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (x_[j]) r_[i] += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
    energy_ = qubo_energy(*q_, x_);
  }

  const Qubo* q_;
  BitVector x_;
  std::vector<double> r_;
  double energy_ = 0.0;
};

struct TabuConfig {
  std::size_t tenure = 0;  // 0: min(20, ceil(n / 4))
  std::uint64_t restart_after = 2000;
  std::uint64_t sweeps = 20;     // move budget is 50 * n * sweeps
  std::uint64_t max_moves = 0;   // overrides the sweep budget when nonzero
  std::uint64_t seed = 0;
};

/// Each move flips the best admissible bit. A bit flipped at move t stays
/// tabu until move t + tenure unless flipping it would beat the incumbent
/// (aspiration). After `restart_after` consecutive moves without a new
/// incumbent, the search restarts from the incumbent with about a tenth of
/// its bits flipped at random.
///
/// The report's trace holds the energy after every move, preceded by the
/// initial energy; `evals` is the trace length and `iterations` the number
/// of moves.
inline OptimizerReport tabu_search(const Qubo& q, const TabuConfig& cfg = {}) {
  const std::size_t n = q.size();
  Rng rng(cfg.seed);
  OptimizerReport report;
  if (n == 0) {
    report.best_energy = 0.0;
    report.evals = 1;
    report.trace.push_back({0, 0.0});
    return report;
  }
  const std::size_t tenure = cfg.tenure > 0 ? cfg.tenure : std::min<std::size_t>(20, (n + 3) / 4);
  const std::uint64_t max_moves = cfg.max_moves > 0 ? cfg.max_moves : 50 * n * cfg.sweeps;

  BitVector start(n);
  for (auto& b : start) b = rng.bernoulli(0.5) ? 1 : 0;
  QuboFlipState state(q, std::move(start));
  BitVector best_bits = state.bits();
  double best = state.energy();
  report.trace.push_back({0, best});

  std::vector<std::uint64_t> tabu_until(n, 0);
  std::uint64_t stale = 0;
  const double eps = 1e-12;

  for (std::uint64_t move = 1; move <= max_moves; ++move) {
    std::size_t pick = n;
    double pick_delta = std::numeric_limits<double>::infinity();
    std::size_t fallback = 0;
    double fallback_delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double d = state.delta(i);
      if (d < fallback_delta) {
        fallback_delta = d;
        fallback = i;
      }
      const bool is_tabu = tabu_until[i] > move;
      const bool aspirates = state.energy() + d < best - eps;
      if ((!is_tabu || aspirates) && d < pick_delta) {
        pick_delta = d;
        pick = i;
      }
    }
    if (pick == n) pick = fallback;

    state.flip(pick);
    tabu_until[pick] = move + tenure;
    report.trace.push_back({move, state.energy()});
    report.iterations = move;

    if (state.energy() < best - eps) {
      best = state.energy();
      best_bits = state.bits();
      stale = 0;
    } else if (++stale >= cfg.restart_after) {
      BitVector perturbed = best_bits;
      const std::size_t flips = std::max<std::size_t>(1, n / 10);
      for (std::size_t f = 0; f < flips; ++f) perturbed[rng.below(n)] ^= 1U;
      state.reset(std::move(perturbed));
      std::fill(tabu_until.begin(), tabu_until.end(), 0);
      stale = 0;
    }
  }

  report.best_bits = std::move(best_bits);
  // Re-evaluated from scratch so incremental rounding never leaks out.
  report.best_energy = qubo_energy(q, report.best_bits);
  report.evals = report.trace.size();
  return report;
}

}  // namespace expq
