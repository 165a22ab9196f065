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

/// @file basinhopping.hpp
/// @brief Basin hopping: random perturbation, local minimization and
/// Metropolis acceptance, with an adaptive step size.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "expq/optimizers/linear_trust_region.hpp"
#include "expq/optimizers/objective.hpp"
#include "expq/rng.hpp"

namespace expq {

struct BasinHoppingConfig {
  std::uint64_t hops = 200;
  double initial = std::numbers::pi;  // every coordinate starts here
  double stepsize = 2.0 * std::numbers::pi;
  std::uint64_t interval = 10;  // hops between step-size updates
  double target_accept = 0.5;
  double factor = 0.9;
  double temperature = 1.0;
  /// Initial trust radius of the local minimizer. The benchmark setting is
  /// (#variables) / 2^(|V| - 1); see basinhopping_rhobeg().
  double rhobeg = 0.5;
  double rhoend = 1e-4;
  std::uint64_t local_max_evals = 1000;
  std::uint64_t max_evals = kUnlimited;
  std::uint64_t seed = 0;
};

inline double basinhopping_rhobeg(std::size_t n_variables, std::size_t n_nodes) {
  return std::ldexp(static_cast<double>(n_variables), -static_cast<int>(n_nodes - 1));
}

/// Starts with a local minimization from the all-`initial` point, then
/// performs up to `hops` hops. Each hop perturbs the current point uniformly
/// in [-stepsize, stepsize] per coordinate (wrapped into [0, 2pi)), minimizes
/// locally, and accepts the result with probability
/// min(1, exp(-(E_new - E_cur) / T)). Every `interval` hops the step size is
/// divided by `factor` if the overall acceptance rate exceeds the target and
/// multiplied by it otherwise. `iterations` counts hops.
inline OptimizerReport basinhopping(Objective& obj, const BasinHoppingConfig& cfg = {}) {
  return run_with_budget(obj, cfg.max_evals, [&](Objective& f) {
    Rng rng(cfg.seed);
    LinearTrustRegionConfig local{cfg.rhobeg, cfg.rhoend < cfg.rhobeg ? cfg.rhoend : cfg.rhobeg * 1e-2,
                                  cfg.local_max_evals, 0.5};
    auto wrap_all = [](std::vector<double> v) {
      for (double& a : v) a = wrap_angle(a);
      return v;
    };

    std::vector<double> start(f.dim(), cfg.initial);
    LocalResult cur = linear_trust_region_minimize(f, start, local);
    cur.x = wrap_all(std::move(cur.x));
    double step = cfg.stepsize;
    std::uint64_t accepted = 0;

    for (std::uint64_t hop = 1; hop <= cfg.hops; ++hop) {
      f.note_iteration();
      std::vector<double> trial = cur.x;
      for (double& a : trial) a = wrap_angle(a + rng.uniform(-step, step));
      LocalResult next = linear_trust_region_minimize(f, trial, local);
      next.x = wrap_all(std::move(next.x));

      const double delta = next.value - cur.value;
      const bool accept = delta < 0.0 || rng.uniform() < std::exp(-delta / cfg.temperature);
      if (accept) {
        cur = std::move(next);
        ++accepted;
      }
      if (cfg.interval > 0 && hop % cfg.interval == 0) {
        const double rate = static_cast<double>(accepted) / static_cast<double>(hop);
        step = rate > cfg.target_accept ? step / cfg.factor : step * cfg.factor;
      }
    }
  });
}

}  // namespace expq
