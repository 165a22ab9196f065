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
#include <map>
#include <numbers>
#include <vector>

#include "expq/encoding.hpp"
#include "expq/generators.hpp"
#include "expq/simulator.hpp"

namespace expq {
namespace {

constexpr double kPi = std::numbers::pi;

Matrix padded(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n_nodes());
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << EncodingLayout::qubits_for(g.n_nodes()));
  Matrix m = Matrix::Zero(dim, dim);
  m.topLeftCorner(n, n) = laplacian(g);
  return m;
}

WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

WeightedGraph random_graph(std::size_t n, Rng& rng) {
  WeightedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(0.6)) g.add_edge(i, j, rng.uniform(0.0, 5.0));
    }
  }
  return g;
}

Statevector state_of(std::vector<Complex> amps) {
  Statevector s;
  s.amplitudes = Eigen::Map<ComplexVector>(amps.data(), static_cast<Eigen::Index>(amps.size()));
  return s;
}

std::map<std::string, double> as_map(const std::vector<PauliTerm>& terms) {
  std::map<std::string, double> m;
  for (const auto& t : terms) m[t.word] = t.coefficient;
  return m;
}

TEST(PauliDecompose, SingleQubit) {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_EQ(as_map(pauli_decompose(x)), (std::map<std::string, double>{{"X", 1.0}}));
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  EXPECT_EQ(as_map(pauli_decompose(z)), (std::map<std::string, double>{{"Z", 1.0}}));
}

TEST(PauliDecompose, PaddedTriangle) {
  const auto terms = as_map(pauli_decompose(padded(triangle())));
  EXPECT_NEAR(terms.at("II"), 1.5, 1e-15);
}

TEST(PauliDecompose, QubitOrderIsMostSignificantFirst) {
  // |0><1| + |1><0| on the high qubit of two is X (x) I.
  Matrix m = Matrix::Zero(4, 4);
  m(0, 2) = m(2, 0) = 1.0;
  m(1, 3) = m(3, 1) = 1.0;
  EXPECT_EQ(as_map(pauli_decompose(m)), (std::map<std::string, double>{{"XI", 1.0}}));
}

TEST(PauliDecompose, ReconstructsRandomSymmetric) {
  Rng rng(1);
  for (int n = 1; n <= 4; ++n) {
    const auto dim = Eigen::Index{1} << n;
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = i; j < dim; ++j) m(i, j) = m(j, i) = rng.normal();
    }
    const auto terms = pauli_decompose(m);
    const ComplexMatrix back = pauli_reconstruct(terms, static_cast<std::size_t>(n));
    EXPECT_LT((back.real() - m).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT(back.imag().cwiseAbs().maxCoeff(), 1e-10);
    for (const auto& t : terms) {
      EXPECT_EQ(std::count(t.word.begin(), t.word.end(), 'Y') % 2, 0);
    }
  }
}

TEST(PauliDecompose, DiagonalHasNoFlipWords) {
  for (const auto& t : pauli_decompose(padded(WeightedGraph(5)))) {
    EXPECT_EQ(t.word.find_first_of("XY"), std::string::npos);
  }
  Matrix d = Matrix::Zero(8, 8);
  d.diagonal() << 1, 2, 3, 4, 5, 6, 7, 8;
  for (const auto& t : pauli_decompose(d)) EXPECT_EQ(t.word.find_first_of("XY"), std::string::npos);
}

TEST(PauliDecompose, RejectsNonPowerOfTwo) {
  EXPECT_THROW(pauli_decompose(Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST(PrepareState, Examples) {
  DiagonalUnitary u;
  u.entries.assign(4, {1.0, 0.0});
  Statevector s = prepare_state(u);
  for (Eigen::Index j = 0; j < 4; ++j) EXPECT_EQ(s.amplitudes(j), Complex(0.5, 0.0));
  u.entries[1] = {-1.0, 0.0};
  s = prepare_state(u);
  EXPECT_EQ(s.amplitudes(1), Complex(-0.5, 0.0));
  Rng rng(2);
  for (auto& e : u.entries) e = std::polar(1.0, rng.uniform(0.0, kTwoPi));
  EXPECT_NEAR(prepare_state(u).norm(), 1.0, 1e-12);
}

TEST(ExpectationExact, Examples) {
  const Statevector uniform = state_of({0.5, 0.5, 0.5, 0.5});
  EXPECT_EQ(expectation_exact(uniform, Matrix::Zero(4, 4)), 0.0);
  const Statevector s = state_of({0.5, -0.5, 0.5, 0.5});
  EXPECT_NEAR(expectation_exact(s, padded(triangle())), 2.0, 1e-12);
  EXPECT_NEAR(expectation_exact(s, Matrix::Identity(4, 4)), 1.0, 1e-12);
  EXPECT_THROW(expectation_exact(s, Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST(ExpectationExact, GlobalPhaseInvariant) {
  Rng rng(3);
  DiagonalUnitary u;
  for (int j = 0; j < 8; ++j) u.entries.push_back(std::polar(1.0, rng.uniform(0.0, kTwoPi)));
  const Statevector s = prepare_state(u);
  Statevector t = s;
  t.amplitudes *= std::polar(1.0, 0.7);
  const Matrix l = padded(random_graph(7, rng));
  EXPECT_NEAR(expectation_exact(s, l), expectation_exact(t, l), 1e-12);
}

TEST(ExpectationSampled, TrivialCases) {
  Rng rng(4);
  const Statevector s = state_of({0.5, -0.5, 0.5, 0.5});
  EXPECT_EQ(expectation_sampled(s, std::vector<PauliTerm>{{1.0, "II"}}, 3, rng), 1.0);
  EXPECT_EQ(expectation_sampled(s, std::vector<PauliTerm>{}, 10, rng), 0.0);
  EXPECT_THROW(expectation_sampled(s, std::vector<PauliTerm>{{1.0, "II"}}, 0, rng), std::invalid_argument);
}

TEST(ExpectationSampled, ConvergesToExact) {
  Rng rng(5);
  const WeightedGraph g = random_graph(6, rng);
  DiagonalUnitary u;
  for (int j = 0; j < 8; ++j) u.entries.push_back(std::polar(1.0, rng.uniform(0.0, kTwoPi)));
  const Statevector s = prepare_state(u);
  const Matrix l = padded(g);
  const auto terms = pauli_decompose(l);
  const double exact = expectation_exact(s, l);
  // Each group is an independent mean of +-1 outcomes; bound the standard
  // deviation by the absolute coefficient sum.
  double bound = 0.0;
  for (const auto& t : terms) {
    if (t.word.find_first_not_of('I') != std::string::npos) bound += std::abs(t.coefficient);
  }
  const std::size_t shots = 100000;
  const double est = expectation_sampled(s, terms, shots, rng);
  EXPECT_NEAR(est, exact, 5.0 * bound / std::sqrt(static_cast<double>(shots)));
}

TEST(ExpectationSampled, YWordsAreMeasuredCorrectly) {
  Rng rng(6);
  DiagonalUnitary u;
  for (int j = 0; j < 4; ++j) u.entries.push_back(std::polar(1.0, rng.uniform(0.0, kTwoPi)));
  const Statevector s = prepare_state(u);
  for (const char* w : {"YY", "XY", "YX", "XX", "ZY", "IY"}) {
    const ComplexMatrix p = pauli_matrix(w);
    const double exact = (s.amplitudes.adjoint() * p * s.amplitudes)(0, 0).real();
    const double est = expectation_sampled(s, std::vector<PauliTerm>{{1.0, w}}, 200000, rng);
    EXPECT_NEAR(est, exact, 5.0 / std::sqrt(200000.0)) << w;
  }
}

TEST(DiagonalAnsatz, TriangleCut) {
  const DiagonalAnsatz a(triangle(), EncodingLayout::full(3), EncodingSpec::rf_prime());
  EvalCounter counter;
  const std::vector<double> angles{kPi / 2, 3 * kPi / 2};
  EXPECT_NEAR(ansatz_energy(a, angles, EvalMode::exact(), counter), 2.0, 1e-12);
  EXPECT_EQ(counter.count(), 1u);
  EXPECT_EQ(a.n_qubits(), 2u);
  EXPECT_TRUE(is_symmetric(a.padded_laplacian()));
}

TEST(DiagonalAnsatz, EdgelessIsZero) {
  const DiagonalAnsatz a(WeightedGraph(5), EncodingLayout::compact(5, 2), EncodingSpec::rf_prime());
  EvalCounter counter;
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const std::vector<double> angles{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)};
    EXPECT_NEAR(ansatz_energy(a, angles, EvalMode::exact(), counter), 0.0, 1e-12);
  }
  EXPECT_EQ(counter.count(), 10u);
}

TEST(DiagonalAnsatz, IdentityOnAllPlateauSettings) {
  Rng rng(8);
  for (std::size_t n = 2; n <= 8; ++n) {
    const WeightedGraph g = random_graph(n, rng);
    for (const auto& spec : {EncodingSpec::rf_prime(), EncodingSpec::rf(default_rf_m(n))}) {
      for (const auto& layout : {EncodingLayout::full(n), EncodingLayout::compact(n, 1 + (n - 1) / 2)}) {
        const DiagonalAnsatz a(g, layout, spec);
        EvalCounter counter;
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (n - 1)); ++idx) {
          std::vector<int> v(n, 1);
          for (std::size_t j = 0; j + 1 < n; ++j) v[j] = (idx >> j) & 1 ? -1 : 1;
          const double e = ansatz_energy(a, angles_for_spins(v, layout), EvalMode::exact(), counter);
          ASSERT_NEAR(e, cut_value_quadratic(g, v), 1e-9);
        }
      }
    }
  }
}

TEST(DiagonalAnsatz, RejectsMismatchedLayout) {
  EXPECT_THROW(DiagonalAnsatz(triangle(), EncodingLayout::full(4), EncodingSpec::rf_prime()),
               std::invalid_argument);
}

TEST(AnsatzEnergy, SampledModeNeedsRng) {
  const DiagonalAnsatz a(triangle(), EncodingLayout::full(3), EncodingSpec::rf_prime());
  EvalCounter counter;
  const std::vector<double> angles{kPi / 2, 3 * kPi / 2};
  EXPECT_THROW(ansatz_energy(a, angles, EvalMode::sampled(10), counter), std::invalid_argument);
  Rng rng(1);
  const double e = ansatz_energy(a, angles, EvalMode::sampled(20000), counter, &rng);
  EXPECT_NEAR(e, 2.0, 0.2);
}

}  // namespace
}  // namespace expq
