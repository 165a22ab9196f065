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

/// @file simulator.hpp
/// @brief Statevector evaluation of the diagonal ansatz energy
/// 2^(n-2) <0|H U(a) L U(a) H|0>, exact or with simulated shot noise.
///
/// Qubit convention: character k of a Pauli word acts on bit (n - 1 - k) of
/// the basis-state index, i.e. words read most significant qubit first, the
/// same order as a Kronecker product P_0 (x) P_1 (x) ... (x) P_{n-1}.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "expq/encoding.hpp"
#include "expq/problems.hpp"
#include "expq/rng.hpp"

namespace expq {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

struct Statevector {
  ComplexVector amplitudes;

  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes.size()); }
  std::size_t n_qubits() const { return static_cast<std::size_t>(std::countr_zero(dimension())); }
  double norm() const { return amplitudes.norm(); }
};

struct PauliTerm {
  double coefficient = 0.0;
  std::string word;
};

namespace detail {

struct PauliMasks {
  std::uint64_t x = 0;  // X or Y: flips the bit
  std::uint64_t z = 0;  // Z or Y: sign from the bit
  int n_y = 0;
};

inline PauliMasks pauli_masks(std::string_view word) {
  PauliMasks m;
  const std::size_t n = word.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
    switch (word[k]) {
      case 'I': break;
      case 'X': m.x |= bit; break;
      case 'Y': m.x |= bit; m.z |= bit; ++m.n_y; break;
      case 'Z': m.z |= bit; break;
      default: throw std::invalid_argument("Pauli word may only contain I, X, Y, Z");
    }
  }
  return m;
}

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

inline bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace detail

/// Dense 2^n x 2^n matrix of a Pauli word.
inline ComplexMatrix pauli_matrix(std::string_view word) {
  const detail::PauliMasks m = detail::pauli_masks(word);
  const std::size_t dim = std::size_t{1} << word.size();
  ComplexMatrix p = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  // P|j> = phase(j) |j ^ x>, with one factor of i per Y: Y|0> = i|1>, Y|1> = -i|0>.
  Complex iy{1.0, 0.0};
  for (int k = 0; k < m.n_y; ++k) iy *= Complex{0.0, 1.0};
  for (std::size_t j = 0; j < dim; ++j) {
    const double sign = detail::parity(j & m.z) ? -1.0 : 1.0;
    p(static_cast<Eigen::Index>(j ^ m.x), static_cast<Eigen::Index>(j)) = iy * sign;
  }
  return p;
}

/// Coefficients c_P = Tr(P M) / 2^n of a real symmetric matrix over all 4^n
/// words; terms with |c_P| < 1e-12 are dropped. Words with an odd number of
/// Y factors are antisymmetric and never appear.
inline std::vector<PauliTerm> pauli_decompose(const Matrix& m) {
  const auto dim = static_cast<std::size_t>(m.rows());
  if (m.rows() != m.cols() || !detail::is_power_of_two(dim)) {
    throw std::invalid_argument("pauli_decompose: dimension must be a power of two");
  }
  if (!is_symmetric(m)) throw std::invalid_argument("pauli_decompose: matrix must be symmetric");
  const std::size_t n = static_cast<std::size_t>(std::countr_zero(dim));
  const std::uint64_t n_words = std::uint64_t{1} << (2 * n);
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};

  std::vector<PauliTerm> terms;
  std::string word(n, 'I');
  for (std::uint64_t code = 0; code < n_words; ++code) {
    for (std::size_t k = 0; k < n; ++k) word[k] = kLetters[(code >> (2 * (n - 1 - k))) & 3U];
    const detail::PauliMasks pm = detail::pauli_masks(word);
    if (pm.n_y % 2 == 1) continue;
    // Tr(P M) = sum_r phase(r) M(r, r ^ x), phase(r) = i^{n_y} (-1)^{|r & z|}.
    double trace = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t r = j ^ pm.x;
      const double sign = detail::parity(r & pm.z) ? -1.0 : 1.0;
      trace += sign * m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
    }
    // (i)^{n_y} is +-1 for even n_y.
    const double iy = (pm.n_y / 2) % 2 == 0 ? 1.0 : -1.0;
    const double c = iy * trace / static_cast<double>(dim);
    if (std::abs(c) >= 1e-12) terms.push_back({c, word});
  }
  return terms;
}

/// Sum of c_P P as a dense matrix.
inline ComplexMatrix pauli_reconstruct(std::span<const PauliTerm> terms, std::size_t n_qubits) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const PauliTerm& t : terms) out += t.coefficient * pauli_matrix(t.word);
  return out;
}

/// U H^{(x)n} |0>: amplitude j is u_j / sqrt(2^n).
inline Statevector prepare_state(const DiagonalUnitary& u) {
  if (!detail::is_power_of_two(u.size())) throw std::invalid_argument("prepare_state: length must be 2^n");
  Statevector s;
  s.amplitudes.resize(static_cast<Eigen::Index>(u.size()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(u.size()));
  for (std::size_t j = 0; j < u.size(); ++j) s.amplitudes(static_cast<Eigen::Index>(j)) = u[j] * scale;
  return s;
}

/// <s|M|s> by dense contraction.
inline double expectation_exact(const Statevector& s, const Matrix& m) {
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != s.dimension()) {
    throw std::invalid_argument("expectation_exact: dimension mismatch");
  }
  // Re<s|M|s> = re^T M re + im^T M im for real M; the imaginary part is
  // antisymmetric in M and vanishes for symmetric observables.
  const Vector re = s.amplitudes.real();
  const Vector im = s.amplitudes.imag();
  return re.dot(m * re) + im.dot(m * im);
}

namespace detail {

inline void apply_1q(ComplexVector& amp, std::size_t bit, const Complex g[2][2]) {
  const std::size_t mask = std::size_t{1} << bit;
  for (Eigen::Index j = 0; j < amp.size(); ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (uj & mask) continue;
    const auto k = static_cast<Eigen::Index>(uj | mask);
    const Complex a0 = amp(j), a1 = amp(k);
    amp(j) = g[0][0] * a0 + g[0][1] * a1;
    amp(k) = g[1][0] * a0 + g[1][1] * a1;
  }
}

/// Histogram of `shots` computational-basis samples.
inline std::vector<std::uint64_t> sample_counts(const ComplexVector& amp, std::size_t shots, Rng& rng) {
  const auto dim = static_cast<std::size_t>(amp.size());
  std::vector<double> cdf(dim);
  double acc = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    acc += std::norm(amp(static_cast<Eigen::Index>(j)));
    cdf[j] = acc;
  }
  std::vector<std::uint64_t> counts(dim, 0);
  for (std::size_t s = 0; s < shots; ++s) {
    const double r = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
    if (it == cdf.end()) --it;
    ++counts[static_cast<std::size_t>(it - cdf.begin())];
  }
  return counts;
}

inline double mean_parity(const std::vector<std::uint64_t>& counts, std::uint64_t mask, std::size_t shots) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const auto c = static_cast<std::int64_t>(counts[j]);
    total += parity(j & mask) ? -c : c;
  }
  return static_cast<double>(total) / static_cast<double>(shots);
}

}  // namespace detail

/// Shot-noise estimate of sum_P c_P <s|P|s>.
///
/// Words made of I and Z share one batch of computational-basis samples.
/// Every word with an X or Y is measured in its own rotated basis (H for X,
/// H S^dagger for Y) with a fresh batch of `shots` samples.
inline double expectation_sampled(const Statevector& s, std::span<const PauliTerm> terms,
                                  std::size_t shots, Rng& rng) {
  if (shots == 0) throw std::invalid_argument("expectation_sampled: shots must be positive");
  const std::size_t n = s.n_qubits();
  const double r2 = 1.0 / std::sqrt(2.0);
  const Complex h[2][2] = {{r2, r2}, {r2, -r2}};
  const Complex hsdg[2][2] = {{r2, Complex{0.0, -r2}}, {r2, Complex{0.0, r2}}};

  double total = 0.0;
  std::vector<std::uint64_t> z_counts;
  for (const PauliTerm& t : terms) {
    if (t.word.size() != n) throw std::invalid_argument("expectation_sampled: word length mismatch");
    if (t.coefficient == 0.0) continue;
    const detail::PauliMasks pm = detail::pauli_masks(t.word);
    if (pm.x == 0) {
      if (pm.z == 0) {
        total += t.coefficient;
        continue;
      }
      if (z_counts.empty()) z_counts = detail::sample_counts(s.amplitudes, shots, rng);
      total += t.coefficient * detail::mean_parity(z_counts, pm.z, shots);
      continue;
    }
    ComplexVector rotated = s.amplitudes;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = n - 1 - k;
      if (t.word[k] == 'X') detail::apply_1q(rotated, bit, h);
      if (t.word[k] == 'Y') detail::apply_1q(rotated, bit, hsdg);
    }
    const auto counts = detail::sample_counts(rotated, shots, rng);
    total += t.coefficient * detail::mean_parity(counts, pm.x | pm.z, shots);
  }
  return total;
}

// ---------------------------------------------------------------------------

/// Number of energy evaluations, safe to bump from several threads.
class EvalCounter {
 public:
  EvalCounter() = default;
  EvalCounter(const EvalCounter&) = delete;
  EvalCounter& operator=(const EvalCounter&) = delete;

  void increment() { count_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

struct EvalMode {
  std::size_t shots = 0;  // 0 means exact

  static EvalMode exact() { return {0}; }
  static EvalMode sampled(std::size_t shots) {
    if (shots == 0) throw std::invalid_argument("EvalMode: shots must be positive");
    return {shots};
  }
  bool is_exact() const { return shots == 0; }
};

/// Graph Laplacian padded to 2^n, its Pauli decomposition, and the encoding
/// that turns angles into the diagonal unitary.
class DiagonalAnsatz {
 public:
  DiagonalAnsatz(WeightedGraph graph, EncodingLayout layout, EncodingSpec spec)
      : graph_(std::move(graph)), layout_(std::move(layout)), spec_(spec) {
    if (layout_.n_nodes() != graph_.n_nodes()) {
      throw std::invalid_argument("DiagonalAnsatz: layout and graph disagree on node count");
    }
    const auto dim = static_cast<Eigen::Index>(layout_.dimension());
    const auto nodes = static_cast<Eigen::Index>(graph_.n_nodes());
    padded_ = Matrix::Zero(dim, dim);
    padded_.topLeftCorner(nodes, nodes) = laplacian(graph_);
    terms_ = pauli_decompose(padded_);
  }

  const WeightedGraph& graph() const { return graph_; }
  const EncodingLayout& layout() const { return layout_; }
  const EncodingSpec& spec() const { return spec_; }
  const Matrix& padded_laplacian() const { return padded_; }
  const std::vector<PauliTerm>& pauli_terms() const { return terms_; }
  std::size_t n_qubits() const { return layout_.n_qubits(); }
  std::size_t n_variables() const { return layout_.n_variables(); }

  Statevector state(std::span<const double> angles) const {
    return prepare_state(build_diagonal(angles, layout_, spec_));
  }

 private:
  WeightedGraph graph_;
  EncodingLayout layout_;
  EncodingSpec spec_;
  Matrix padded_;
  std::vector<PauliTerm> terms_;
};

/// 2^(n-2) <psi(angles)| L |psi(angles)>, the cut value of the encoded spins
/// when the angles sit on plateaus. Counts one evaluation.
///
/// `rng` is only drawn from in sampled mode and may be null for exact mode.
inline double ansatz_energy(const DiagonalAnsatz& a, std::span<const double> angles,
                            EvalMode mode, EvalCounter& counter, Rng* rng = nullptr) {
  const Statevector s = a.state(angles);
  double e;
  if (mode.is_exact()) {
    e = expectation_exact(s, a.padded_laplacian());
  } else {
    if (rng == nullptr) throw std::invalid_argument("ansatz_energy: sampled mode needs an rng");
    e = expectation_sampled(s, a.pauli_terms(), mode.shots, *rng);
  }
  counter.increment();
  return std::ldexp(e, static_cast<int>(a.n_qubits()) - 2);
}

}  // namespace expq
