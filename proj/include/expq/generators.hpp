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

/// @file generators.hpp
/// @brief Seeded instance generators for the three benchmark families.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "expq/problems.hpp"
#include "expq/rng.hpp"
#include "expq/tsp.hpp"

namespace expq {

/// N(0,1) entries, each unordered pair kept with probability `density`,
/// then symmetrized as (Q + Q^T) / 2.
inline Qubo random_qubo(std::size_t n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_qubo: n must be positive");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("random_qubo: density must lie in [0, 1]");
  Rng rng(seed);
  const auto m = static_cast<Eigen::Index>(n);
  Matrix q(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) q(i, j) = rng.normal();
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      if (!rng.bernoulli(density)) {
        q(i, j) = 0.0;
        q(j, i) = 0.0;
      }
    }
  }
  Matrix sym = 0.5 * (q + q.transpose());
  return Qubo(std::move(sym));
}

namespace detail {

/// One run of the pairing model where each pair of remaining half-edges is
/// accepted only if it forms a new simple edge. Returns false when the
/// remaining half-edges admit no suitable pair.
inline bool try_pairing(std::size_t n, std::size_t d, Rng& rng,
                        std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  edges.clear();
  std::vector<std::size_t> points;
  points.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < d; ++k) points.push_back(v);
  }
  std::vector<std::uint8_t> adj(n * n, 0);
  auto suitable = [&](std::size_t a, std::size_t b) {
    return points[a] != points[b] && !adj[points[a] * n + points[b]];
  };

  while (!points.empty()) {
    const std::size_t p = points.size();
    std::size_t a = 0, b = 0;
    bool found = false;
    for (int tries = 0; tries < 64 && !found; ++tries) {
      a = rng.below(p);
      b = rng.below(p);
      found = a != b && suitable(a, b);
    }
    if (!found) {
      // Exhaustive scan before declaring a dead end.
      std::vector<std::pair<std::size_t, std::size_t>> candidates;
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
          if (suitable(i, j)) candidates.emplace_back(i, j);
        }
      }
      if (candidates.empty()) return false;
      std::tie(a, b) = candidates[rng.below(candidates.size())];
    }
    const std::size_t u = points[a], v = points[b];
    adj[u * n + v] = adj[v * n + u] = 1;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    if (a < b) std::swap(a, b);
    points[a] = points.back();
    points.pop_back();
    points[b] = points.back();
    points.pop_back();
  }
  return true;
}

}  // namespace detail

/// Simple d-regular graph with uniform weights in [w_lo, w_hi].
///
/// Built with the pairing (configuration) model, rejecting unsuitable pairs
/// as they are drawn and restarting on dead ends, at most 1000 times. For
/// d > (n - 1) / 2 the complement of an (n - 1 - d)-regular graph is used,
/// since the pairing model rarely completes on dense targets.
inline WeightedGraph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed,
                                          double w_lo = 0.0, double w_hi = 5.0) {
  if (d >= n || (n * d) % 2 != 0) {
    throw std::invalid_argument("random_regular_graph: need d < n and n * d even");
  }
  Rng rng(seed);
  const bool complement = 2 * d > n - 1;
  const std::size_t target = complement ? n - 1 - d : d;

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool ok = target == 0;
  for (int attempt = 0; attempt < 1000 && !ok; ++attempt) ok = detail::try_pairing(n, target, rng, edges);
  if (!ok) throw std::runtime_error("random_regular_graph: pairing failed after 1000 attempts");

  if (complement) {
    std::vector<std::uint8_t> adj(n * n, 0);
    for (auto [u, v] : edges) adj[u * n + v] = 1;
    edges.clear();
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (!adj[u * n + v]) edges.emplace_back(u, v);
      }
    }
  }
  std::sort(edges.begin(), edges.end());

  WeightedGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v, rng.uniform(w_lo, w_hi));
  return g;
}

/// n cities uniform in [0, 100]^2 with Euclidean distances; B = 1 and
/// A = 1 + ceil(max distance).
inline TspInstance random_tsp(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_tsp: need at least 3 cities");
  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.uniform(0.0, 100.0);
    y[i] = rng.uniform(0.0, 100.0);
  }
  const auto m = static_cast<Eigen::Index>(n);
  TspInstance t;
  t.distances = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double dist = std::hypot(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)],
                                     y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)]);
      t.distances(i, j) = dist;
      t.distances(j, i) = dist;
    }
  }
  t.penalty_b = 1.0;
  t.penalty_a = 1.0 + std::ceil(t.distances.maxCoeff());
  return t;
}

}  // namespace expq
