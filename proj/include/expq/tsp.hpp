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

/// @file tsp.hpp
/// @brief Travelling salesman instances in position-based QUBO form.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "expq/problems.hpp"

namespace expq {

struct TspInstance {
  Matrix distances;
  double penalty_a = 1.0;  // constraint weight
  double penalty_b = 1.0;  // distance weight

  std::size_t n_cities() const { return static_cast<std::size_t>(distances.rows()); }

  void validate() const {
    const auto n = distances.rows();
    if (n != distances.cols() || n < 1) throw std::invalid_argument("TspInstance: square distance matrix required");
    if (!is_symmetric(distances)) throw std::invalid_argument("TspInstance: distances must be symmetric");
    for (Eigen::Index i = 0; i < n; ++i) {
      if (distances(i, i) != 0.0) throw std::invalid_argument("TspInstance: nonzero diagonal");
    }
    if ((distances.array() < 0.0).any()) throw std::invalid_argument("TspInstance: negative distance");
    if (!(penalty_a > penalty_b * distances.maxCoeff())) {
      throw std::invalid_argument("TspInstance: penalty_a must dominate penalty_b * max distance");
    }
  }
};

/// Variable index of "city v at tour position p".
inline std::size_t tsp_variable(std::size_t city, std::size_t position, std::size_t n) {
  return city * n + position;
}

/// Length of the closed tour visiting `tour` in order.
inline double tour_length(const Matrix& d, std::span<const std::size_t> tour) {
  double len = 0.0;
  for (std::size_t p = 0; p < tour.size(); ++p) {
    len += d(static_cast<Eigen::Index>(tour[p]),
             static_cast<Eigen::Index>(tour[(p + 1) % tour.size()]));
  }
  return len;
}

/// True iff the n x n reshaping of x is a permutation matrix.
inline bool tsp_feasible(std::span<const std::uint8_t> x, std::size_t n) {
  if (x.size() != n * n) throw std::invalid_argument("tsp_feasible: expected n^2 bits");
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t row = 0, col = 0;
    for (std::size_t p = 0; p < n; ++p) {
      row += x[tsp_variable(v, p, n)];
      col += x[tsp_variable(p, v, n)];
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

/// City visited at each position, or nullopt if x is not a valid tour.
inline std::optional<std::vector<std::size_t>> tsp_decode(std::span<const std::uint8_t> x,
                                                          std::size_t n) {
  if (!tsp_feasible(x, n)) return std::nullopt;
  std::vector<std::size_t> tour(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t p = 0; p < n; ++p) {
      if (x[tsp_variable(v, p, n)]) tour[p] = v;
    }
  }
  return tour;
}

struct TspQubo {
  Qubo qubo;
  std::size_t n_cities = 0;
  /// For every feasible x, x^T Q x = penalty_b * tour_length + offset.
  double offset = 0.0;

  std::optional<std::vector<std::size_t>> decode(std::span<const std::uint8_t> x) const {
    return tsp_decode(x, n_cities);
  }
};

/// B sum_{u != v} d_uv sum_p x_{u,p} x_{v,p+1}
///   + A sum_v (1 - sum_p x_{v,p})^2 + A sum_p (1 - sum_v x_{v,p})^2
///
/// Each squared constraint expands (with x^2 = x) to 1 - sum x + 2 sum_{a<b} x_a x_b,
/// so every variable gets -2A on the diagonal, pairs sharing a row or column
/// get A on both off-diagonal entries, and the constant 2nA is dropped into
/// `offset` with a negative sign.
inline TspQubo tsp_qubo(const TspInstance& t) {
  t.validate();
  const std::size_t n = t.n_cities();
  const std::size_t nv = n * n;
  const double a = t.penalty_a;
  const double b = t.penalty_b;
  Matrix q = Matrix::Zero(static_cast<Eigen::Index>(nv), static_cast<Eigen::Index>(nv));
  auto add_pair = [&q](std::size_t i, std::size_t j, double w) {
    q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += w;
    q(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += w;
  };

  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t p = 0; p < n; ++p) {
      const auto i = static_cast<Eigen::Index>(tsp_variable(v, p, n));
      q(i, i) -= 2.0 * a;
      for (std::size_t p2 = p + 1; p2 < n; ++p2) add_pair(tsp_variable(v, p, n), tsp_variable(v, p2, n), a);
      for (std::size_t v2 = v + 1; v2 < n; ++v2) add_pair(tsp_variable(v, p, n), tsp_variable(v2, p, n), a);
    }
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const double w = b * t.distances(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
      for (std::size_t p = 0; p < n; ++p) {
        add_pair(tsp_variable(u, p, n), tsp_variable(v, (p + 1) % n, n), 0.5 * w);
      }
    }
  }

  TspQubo out{Qubo(std::move(q)), n, -2.0 * static_cast<double>(n) * a};
  return out;
}

}  // namespace expq
