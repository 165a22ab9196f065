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

/// @file nft.hpp
/// @brief Sequential sinusoidal coordinate minimization (Nakanishi-Fujii-Todo).

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "expq/optimizers/objective.hpp"
#include "expq/rng.hpp"

namespace expq {

struct NftConfig {
  std::uint64_t max_iters = 200;
  std::uint64_t max_evals = 500;
  /// Every this many coordinate updates the current energy is re-measured
  /// instead of taken from the previous fit.
  std::uint64_t reset_interval = 32;
  std::optional<std::vector<double>> initial;  // default: uniform in [0, 2pi)
  std::uint64_t seed = 0;
};

/// Cyclic coordinate updates. For coordinate d, the energy along that axis is
/// modelled as c + a cos(t) + b sin(t) around the current angle and fitted
/// from f(0), f(+2pi/3) and f(-2pi/3); the coordinate then jumps to the fit's
/// minimum and the fitted minimum becomes the new current energy.
///
/// Each update costs two evaluations (three on a reset). The run stops after
/// `max_iters` updates, when the budget runs out, or after a full cycle over
/// all coordinates in which every fit was flat. The final point is measured
/// once more so that it appears in the trace.
inline OptimizerReport nft(Objective& obj, const NftConfig& cfg = {}) {
  const std::size_t k = obj.dim();
  std::vector<double> x(k);
  if (cfg.initial) {
    x = *cfg.initial;
  } else {
    Rng rng(cfg.seed);
    for (double& v : x) v = rng.uniform(0.0, kTwoPi);
  }

  return run_with_budget(obj, cfg.max_evals, [&](Objective& f) {
    if (k == 0) {
      f(x);
      return;
    }
    constexpr double shift = 2.0 * std::numbers::pi / 3.0;
    double f0 = f(x);
    bool measured = true;  // f0 is a measurement of x, not a fit
    std::uint64_t flat_run = 0;
    for (std::uint64_t iter = 0; iter < cfg.max_iters; ++iter) {
      const std::size_t d = iter % k;
      if (iter > 0 && cfg.reset_interval > 0 && iter % cfg.reset_interval == 0) {
        f0 = f(x);
        measured = true;
      }
      f.note_iteration();

      const double keep = x[d];
      x[d] = wrap_angle(keep + shift);
      const double fp = f(x);
      x[d] = wrap_angle(keep - shift);
      const double fm = f(x);
      x[d] = keep;

      const double c = (f0 + fp + fm) / 3.0;
      const double a = f0 - c;
      const double b = (fp - fm) / std::sqrt(3.0);
      const double r = std::hypot(a, b);
      if (r <= 1e-12 * (1.0 + std::abs(c))) {
        if (++flat_run >= k) break;
        continue;
      }
      flat_run = 0;
      x[d] = wrap_angle(keep + std::atan2(-b, -a));
      f0 = c - r;
      measured = false;
    }
    if (!measured) f(x);
  });
}

}  // namespace expq
