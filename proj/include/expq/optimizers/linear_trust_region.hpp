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

/// @file linear_trust_region.hpp
/// @brief Derivative-free local minimizer built on linear interpolation over
/// a simplex, in the style of COBYLA without constraints.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "expq/optimizers/objective.hpp"

namespace expq {

struct LinearTrustRegionConfig {
  double rhobeg = 0.5;
  double rhoend = 1e-4;
  std::uint64_t max_evals = 1000;
  double shrink = 0.5;
};

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
  std::uint64_t evals = 0;
};

/// Minimizes `f` from `x0`.
///
/// A simplex of n + 1 points spaced `rho` apart determines a linear model.
/// The trial point steps a distance `rho` from the best vertex against the
/// model gradient. A successful trial replaces the worst vertex. An
/// unsuccessful trial, a flat model or a degenerate simplex shrinks `rho`
/// and rebuilds the simplex around the best vertex. Stops when rho drops
/// below `rhoend` or after `max_evals` evaluations.
inline LocalResult linear_trust_region_minimize(Objective& f, std::span<const double> x0,
                                                const LinearTrustRegionConfig& cfg) {
  using Eigen::Index;
  const auto n = static_cast<Index>(x0.size());
  std::uint64_t used = 0;
  auto eval = [&](const Eigen::VectorXd& p) {
    ++used;
    return f(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())));
  };

  Eigen::MatrixXd verts(n, n + 1);
  Eigen::VectorXd vals(n + 1);
  verts.col(0) = Eigen::Map<const Eigen::VectorXd>(x0.data(), n);
  vals(0) = eval(verts.col(0));
  Index best = 0;
  double rho = cfg.rhobeg;

  auto rebuild = [&](Index keep) {
    const Eigen::VectorXd centre = verts.col(keep);
    const double fc = vals(keep);
    verts.col(0) = centre;
    vals(0) = fc;
    for (Index i = 0; i < n; ++i) {
      if (used >= cfg.max_evals) return false;
      verts.col(i + 1) = centre;
      verts(i, i + 1) += rho;
      vals(i + 1) = eval(verts.col(i + 1));
    }
    return true;
  };

  bool complete = n == 0 ? false : rebuild(0);
  while (complete && used < cfg.max_evals) {
    vals.minCoeff(&best);
    Eigen::MatrixXd diffs(n, n);
    Eigen::VectorXd dvals(n);
    for (Index i = 0, r = 0; i <= n; ++i) {
      if (i == best) continue;
      diffs.row(r) = (verts.col(i) - verts.col(best)).transpose();
      dvals(r) = vals(i) - vals(best);
      ++r;
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(diffs);
    bool moved = false;
    if (lu.isInvertible()) {
      const Eigen::VectorXd g = lu.solve(dvals);
      const double gn = g.norm();
      if (gn > 0.0 && std::isfinite(gn)) {
        const Eigen::VectorXd trial = verts.col(best) - (rho / gn) * g;
        const double ft = eval(trial);
        if (ft < vals(best)) {
          Index worst = 0;
          vals.maxCoeff(&worst);
          verts.col(worst) = trial;
          vals(worst) = ft;
          moved = true;
        }
      }
    }
    if (moved) continue;
    rho *= cfg.shrink;
    if (rho < cfg.rhoend) break;
    complete = rebuild(best);
  }

  vals.minCoeff(&best);
  LocalResult out;
  out.x.assign(verts.col(best).data(), verts.col(best).data() + n);
  out.value = vals(best);
  out.evals = used;
  return out;
}

}  // namespace expq
