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

/// @file altopt.hpp
/// @brief Alternating optimization over the diagonal entries of the ansatz.
///
/// With one angle per diagonal entry, each entry only needs two candidate
/// angles: pi/2 (entry +1) and 3pi/2 (entry -1). Starting from all +1, the
/// entries are visited top-left to bottom-right and each is set to whichever
/// value gives the lower energy. Sweeps repeat until one full sweep changes
/// nothing, so the result cannot be improved by flipping any single entry.

#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "expq/encoding.hpp"
#include "expq/optimizers/objective.hpp"

namespace expq {

inline constexpr double kPlusAngle = std::numbers::pi / 2.0;
inline constexpr double kMinusAngle = 3.0 * std::numbers::pi / 2.0;

struct AltOptConfig {
  std::uint64_t max_evals = kUnlimited;
};

/// Evaluations: one for the initial state, then one per entry per sweep
/// (the energy of the current setting is carried over, not re-measured).
/// Ties keep the current setting. `iterations` counts sweeps.
inline OptimizerReport altopt(Objective& obj, const EncodingLayout& layout,
                              const AltOptConfig& cfg = {}) {
  if (!layout.is_full()) throw std::invalid_argument("altopt: requires the full layout");
  if (obj.dim() != layout.n_variables()) throw std::invalid_argument("altopt: objective dimension mismatch");

  return run_with_budget(obj, cfg.max_evals, [](Objective& f) {
    std::vector<double> x(f.dim(), kPlusAngle);
    double current = f(x);
    bool improved = true;
    while (improved) {
      improved = false;
      f.note_iteration();
      for (double& xi : x) {
        const double keep = xi;
        xi = keep == kPlusAngle ? kMinusAngle : kPlusAngle;
        const double e = f(x);
        if (e < current) {
          current = e;
          improved = true;
        } else {
          xi = keep;
        }
      }
    }
  });
}

}  // namespace expq
