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

/// @file problems.hpp
/// @brief QUBO, Ising and weighted-graph representations and the exact
/// reductions QUBO -> Ising -> MaxCut.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace expq {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kSymmetryTolerance = 1e-12;

inline bool is_symmetric(const Matrix& m, double tol = kSymmetryTolerance) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
    }
  }
  return true;
}

/// Binary assignment x in {0,1}^n.
using BitVector = std::vector<std::uint8_t>;

/// Spin assignment v in {-1,+1}^n.
using SpinVector = std::vector<int>;

inline SpinVector spins_from_bits(std::span<const std::uint8_t> x) {
  SpinVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] ? 1 : -1;
  return v;
}

/// x_i = (v_i + 1) / 2; only the first `n` spins are used.
inline BitVector bits_from_spins(std::span<const int> v, std::size_t n) {
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = v[i] > 0 ? 1 : 0;
  return x;
}

/// Enumerates all 2^n assignments; bit i of `index` is x_i.
inline BitVector bits_from_index(std::uint64_t index, std::size_t n) {
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (index >> i) & 1U;
  return x;
}

// ---------------------------------------------------------------------------

/// Minimize x^T Q x over binary x. Q is kept symmetric.
class Qubo {
 public:
  Qubo() = default;

  explicit Qubo(Matrix q) : q_(std::move(q)) {
    if (q_.rows() != q_.cols()) throw std::invalid_argument("Qubo: matrix must be square");
    if (!is_symmetric(q_)) throw std::invalid_argument("Qubo: matrix must be symmetric");
  }

  static Qubo zeros(std::size_t n) { return Qubo(Matrix::Zero(n, n)); }

  std::size_t size() const { return static_cast<std::size_t>(q_.rows()); }
  const Matrix& matrix() const { return q_; }
  double operator()(std::size_t i, std::size_t j) const { return q_(i, j); }

 private:
  Matrix q_;
};

inline double qubo_energy(const Qubo& q, std::span<const std::uint8_t> x) {
  if (x.size() != q.size()) throw std::invalid_argument("qubo_energy: dimension mismatch");
  double e = 0.0;
  const Matrix& m = q.matrix();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j]) e += m(i, j);
    }
  }
  return e;
}

// ---------------------------------------------------------------------------

/// E(v) = v^T J v + h^T v + c with J symmetric and zero on the diagonal, so
/// each unordered pair contributes 2 J_ij v_i v_j.
struct IsingModel {
  Matrix couplings;
  Vector fields;
  double offset = 0.0;

  std::size_t size() const { return static_cast<std::size_t>(fields.size()); }
};

inline double ising_energy(const IsingModel& m, std::span<const int> v) {
  if (v.size() < m.size()) throw std::invalid_argument("ising_energy: dimension mismatch");
  double e = m.offset;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    e += m.fields(i) * v[i];
    for (std::size_t j = i + 1; j < n; ++j) e += 2.0 * m.couplings(i, j) * v[i] * v[j];
  }
  return e;
}

/// Substitutes x_i = (v_i + 1)/2.
///
/// For symmetric Q: J_ij = Q_ij / 4 (i != j), h_i = (sum_j Q_ij) / 2 and
/// c = sum_{i != j} Q_ij / 4 + sum_i Q_ii / 2.
inline IsingModel qubo_to_ising(const Qubo& q) {
  const Matrix& m = q.matrix();
  IsingModel ising;
  ising.couplings = m / 4.0;
  ising.couplings.diagonal().setZero();
  ising.fields = m.rowwise().sum() / 2.0;
  ising.offset = (m.sum() - m.trace()) / 4.0 + m.trace() / 2.0;
  return ising;
}

// ---------------------------------------------------------------------------

struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted graph; edges stored with i < j.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n_nodes) : n_nodes_(n_nodes) {}

  WeightedGraph(std::size_t n_nodes, std::vector<Edge> edges) : n_nodes_(n_nodes) {
    for (const Edge& e : edges) add_edge(e.i, e.j, e.weight);
  }

  void add_edge(std::size_t i, std::size_t j, double w) {
    if (i == j) throw std::invalid_argument("WeightedGraph: self-loop");
    if (i >= n_nodes_ || j >= n_nodes_) throw std::invalid_argument("WeightedGraph: node index out of range");
    if (i > j) std::swap(i, j);
    if (!keys_.insert(i * n_nodes_ + j).second) {
      throw std::invalid_argument("WeightedGraph: duplicate edge");
    }
    edges_.push_back({i, j, w});
  }

  std::size_t n_nodes() const { return n_nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return keys_.count(i * n_nodes_ + j) > 0;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_nodes_, 0);
    for (const Edge& e : edges_) {
      ++d[e.i];
      ++d[e.j];
    }
    return d;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_nodes_ == b.n_nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_nodes_ = 0;
  std::vector<Edge> edges_;
  std::unordered_set<std::size_t> keys_;
};

/// L = D - W.
inline Matrix laplacian(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n_nodes());
  Matrix l = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto i = static_cast<Eigen::Index>(e.i);
    const auto j = static_cast<Eigen::Index>(e.j);
    l(i, j) -= e.weight;
    l(j, i) -= e.weight;
    l(i, i) += e.weight;
    l(j, j) += e.weight;
  }
  return l;
}

inline void check_spins(const WeightedGraph& g, std::span<const int> v) {
  if (v.size() != g.n_nodes()) throw std::invalid_argument("cut_value: dimension mismatch");
  for (int s : v) {
    if (s != 1 && s != -1) throw std::invalid_argument("cut_value: spins must be -1 or +1");
  }
}

/// Total weight of edges whose endpoints carry opposite spins.
inline double cut_value(const WeightedGraph& g, std::span<const int> v) {
  check_spins(g, v);
  double cut = 0.0;
  for (const Edge& e : g.edges()) {
    if (v[e.i] != v[e.j]) cut += e.weight;
  }
  return cut;
}

/// The same cut via (1/4) v^T L v.
inline double cut_value_quadratic(const WeightedGraph& g, std::span<const int> v) {
  check_spins(g, v);
  const Matrix l = laplacian(g);
  Vector s(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) s(static_cast<Eigen::Index>(i)) = v[i];
  return 0.25 * s.dot(l * s);
}

// ---------------------------------------------------------------------------

/// Affine map from a cut value back to the energy of the reduced problem:
/// energy = offset - scale * cut.
struct CutAffine {
  double offset = 0.0;
  double scale = 1.0;

  double energy(double cut) const { return offset - scale * cut; }
};

struct MaxCutReduction {
  WeightedGraph graph;
  std::size_t gauge_node = 0;
  CutAffine affine;
};

/// Adds a gauge node g = n. Edge (i, j) carries 2 J_ij (the full coupling of
/// the unordered pair), edge (i, g) carries h_i; zero weights are omitted.
/// For any v with v_g = +1, E(v) = offset - 2 cut(v) with
/// offset = c + sum_{i<j} 2 J_ij + sum_i h_i.
inline MaxCutReduction ising_to_maxcut(const IsingModel& m) {
  const std::size_t n = m.size();
  MaxCutReduction r;
  r.graph = WeightedGraph(n + 1);
  r.gauge_node = n;
  double offset = m.offset;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = 2.0 * m.couplings(i, j);
      if (w != 0.0) r.graph.add_edge(i, j, w);
      offset += w;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double w = m.fields(i);
    if (w != 0.0) r.graph.add_edge(i, n, w);
    offset += w;
  }
  r.affine = {offset, 2.0};
  return r;
}

/// Minimizing this QUBO maximizes the cut: x^T Q x = -cut(x).
inline Qubo maxcut_to_qubo(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n_nodes());
  Matrix q = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto i = static_cast<Eigen::Index>(e.i);
    const auto j = static_cast<Eigen::Index>(e.j);
    q(i, i) -= e.weight;
    q(j, j) -= e.weight;
    q(i, j) += e.weight;
    q(j, i) += e.weight;
  }
  return Qubo(std::move(q));
}

}  // namespace expq
