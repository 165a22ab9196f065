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

/// @file encoding.hpp
/// @brief Plateau encodings mapping continuous angles to binary diagonal
/// entries, and the diagonal unitary built from them.
///
/// Two encodings are provided. The double-exponential encoding `rf` produces
/// near-flat plateaus at 0 and 1 whose sharpness is set by a hyperparameter
/// `m`; its inner exponent grows like 2^m and overflows IEEE doubles quickly.
/// The sawtooth encoding `rf_prime` reaches the same plateaus with every
/// intermediate bounded by 2 and has no hyperparameter.
///
/// For both encodings, entry q of a block takes the value
/// floor(2^q * alpha / pi) mod 2 on its plateaus, so a block with q-values
/// 0..d-1 enumerates all 2^d binary words as alpha sweeps [0, 2pi), with q = 0
/// as the most significant bit.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "expq/rng.hpp"

namespace expq {

enum class EncodingKind { Rf, RfPrime };

/// How the phase offset alpha0 of `rf` is evaluated. `AsWritten` uses base-2
/// logarithms, for which log2(-log2(0.5)) = 0 and the offset vanishes.
/// `NaturalLog` uses ln(-ln 0.5), which places the 0.5 crossing of `rf` at
/// the plateau edge.
enum class Alpha0Variant { AsWritten, NaturalLog };

struct EncodingSpec {
  EncodingKind kind = EncodingKind::RfPrime;
  int m = 0;  // rf only
  Alpha0Variant alpha0 = Alpha0Variant::AsWritten;  // rf only

  static EncodingSpec rf(int m, Alpha0Variant variant = Alpha0Variant::AsWritten) {
    return {EncodingKind::Rf, m, variant};
  }
  static EncodingSpec rf_prime() { return {EncodingKind::RfPrime, 0, Alpha0Variant::AsWritten}; }

  friend bool operator==(const EncodingSpec&, const EncodingSpec&) = default;
};

/// Default sharpness for `rf` on a graph with `n_nodes` vertices.
///
/// Satisfies m >= |V| with five bits of headroom: at a plateau center the
/// inner exponent is at least pi * 2^(m - d) >= 200 for any block size
/// d <= n_nodes - 1, so the encoded value is exactly 0.0 or 1.0 in double
/// precision.
inline int default_rf_m(std::size_t n_nodes) { return static_cast<int>(n_nodes) + 5; }

inline std::string to_string(EncodingKind kind) {
  return kind == EncodingKind::Rf ? "rf" : "rfprime";
}

// ---------------------------------------------------------------------------
// Double-exponential encoding

/// The exponent passed to the outer exp() is clamped to this magnitude.
/// exp(709) is the largest power of e below DBL_MAX.
inline constexpr double kRfExponentClamp = 709.0;

inline double alpha0(int q, int m, Alpha0Variant variant) {
  const double scale = std::ldexp(1.0, m - q);
  const double numerator = variant == Alpha0Variant::AsWritten
                               ? std::log2(-std::log2(0.5))
                               : std::log(-std::log(0.5));
  return std::asin(numerator / scale);
}

/// Unclamped inner exponent 2^(m-q) * sin(2^q * alpha + alpha0(q, m)).
inline double rf_inner_exponent(double alpha, int q, int m,
                                Alpha0Variant variant = Alpha0Variant::AsWritten) {
  const double phase = std::ldexp(wrap_angle(alpha), q) + alpha0(q, m, variant);
  return std::ldexp(std::sin(phase), m - q);
}

struct RfTrace {
  double inner = 0.0;  // unclamped exponent
  bool clamped = false;
  double value = 0.0;
};

inline RfTrace rf_trace(double alpha, int q, const EncodingSpec& spec) {
  if (q < 0 || q > spec.m) {
    throw std::invalid_argument("rf: q must satisfy 0 <= q <= m");
  }
  RfTrace t;
  t.inner = rf_inner_exponent(alpha, q, spec.m, spec.alpha0);
  double e = t.inner;
  if (e > kRfExponentClamp) {
    e = kRfExponentClamp;
    t.clamped = true;
  } else if (e < -kRfExponentClamp) {
    e = -kRfExponentClamp;
    t.clamped = true;
  }
  t.value = std::exp(-std::exp(e));
  return t;
}

/// exp(-exp(2^(m-q) sin(2^q alpha + alpha0(q, m)))), saturating to exactly
/// 0.0 or 1.0 where the inner exponent leaves the representable range.
inline double rf(double alpha, int q, const EncodingSpec& spec) {
  return rf_trace(alpha, q, spec).value;
}

// ---------------------------------------------------------------------------
// Sawtooth encoding

namespace detail {

/// 1 - (2/pi) arctan(cot(x)), a ramp from 0 to 2 with period pi.
///
/// With r = x mod pi in (0, pi), arctan(cot r) = pi/2 - r, so the ramp is
/// 2r/pi. This form is exact at plateau centers and never forms the
/// unbounded cotangent. At r = 0, where cot is singular, the right-continuous
/// value 0 is returned.
inline double ramp(double x) {
  constexpr double pi = std::numbers::pi;
  double r = std::fmod(x, pi);
  if (r < 0.0) r += pi;
  if (r >= pi) return 0.0;
  return 2.0 * r / pi;
}

}  // namespace detail

/// s(alpha, q) = 1 - (2/pi) arctan(cot(2^(q-1) alpha)); values in [0, 2],
/// period 2^(1-q) pi.
inline double sawtooth(double alpha, int q) {
  if (q < 0) throw std::invalid_argument("sawtooth: q must be non-negative");
  return detail::ramp(std::ldexp(wrap_angle(alpha), q - 1));
}

struct RfPrimeTrace {
  double s_bar = 0.0;  // sawtooth(alpha, q), frozen
  double step = 0.0;   // inner sawtooth evaluated at the frozen value
  double value = 0.0;
};

/// Two-stage evaluation of the sawtooth encoding.
///
/// s_bar = s(alpha, q) is computed first and treated as a constant. The inner
/// term s(2^(1-q) pi s_bar, q) has argument 2^(q-1) * 2^(1-q) * pi * s_bar =
/// pi * s_bar, so it does not depend on q. It equals 2 * frac(s_bar), which
/// makes the result floor(s_bar) up to rounding.
inline RfPrimeTrace rf_prime_trace(double alpha, int q) {
  RfPrimeTrace t;
  t.s_bar = sawtooth(alpha, q);
  t.step = detail::ramp(std::numbers::pi * t.s_bar);
  double v = t.s_bar - 0.5 * t.step;
  t.value = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  return t;
}

inline double rf_prime(double alpha, int q) { return rf_prime_trace(alpha, q).value; }

/// Encoded value in [0, 1] for the given spec.
inline double encode(double alpha, int q, const EncodingSpec& spec) {
  return spec.kind == EncodingKind::Rf ? rf(alpha, q, spec) : rf_prime(alpha, q);
}

// ---------------------------------------------------------------------------
// Layout

struct EncodingBlock {
  std::size_t variable = 0;
  std::vector<int> q_values;
};

/// Assignment of the n_nodes - 1 free diagonal entries to angle variables.
///
/// Entries are numbered in block order; within a block, q runs 0..d-1. The
/// last node is the gauge node whose spin is fixed to +1, and diagonal
/// positions from n_nodes - 1 up to 2^n_qubits are held at 1.
class EncodingLayout {
 public:
  EncodingLayout() = default;

  /// One variable per entry, each with q = 0.
  static EncodingLayout full(std::size_t n_nodes) {
    const std::size_t n_spins = spins_for(n_nodes);
    return from_block_sizes(n_nodes, std::vector<std::size_t>(n_spins, 1));
  }

  /// `k` variables sharing the entries as evenly as possible; earlier blocks
  /// take the remainder.
  static EncodingLayout compact(std::size_t n_nodes, std::size_t k) {
    const std::size_t n_spins = spins_for(n_nodes);
    if (n_spins == 0 && k == 0) return from_block_sizes(n_nodes, {});
    if (k < 1 || k > n_spins) {
      throw std::invalid_argument("EncodingLayout: need 1 <= k <= n_nodes - 1");
    }
    std::vector<std::size_t> sizes(k, n_spins / k);
    for (std::size_t i = 0; i < n_spins % k; ++i) ++sizes[i];
    return from_block_sizes(n_nodes, sizes);
  }

  static EncodingLayout from_block_sizes(std::size_t n_nodes,
                                         const std::vector<std::size_t>& sizes) {
    const std::size_t n_spins = spins_for(n_nodes);
    EncodingLayout layout;
    layout.n_nodes_ = n_nodes;
    layout.n_spins_ = n_spins;
    layout.n_qubits_ = qubits_for(n_nodes);
    std::size_t total = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] == 0) throw std::invalid_argument("EncodingLayout: empty block");
      EncodingBlock block{i, {}};
      for (std::size_t q = 0; q < sizes[i]; ++q) block.q_values.push_back(static_cast<int>(q));
      total += sizes[i];
      layout.blocks_.push_back(std::move(block));
    }
    if (total != n_spins) {
      throw std::invalid_argument("EncodingLayout: block sizes must sum to n_nodes - 1");
    }
    return layout;
  }

  static std::size_t qubits_for(std::size_t n_nodes) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < n_nodes) ++n;
    return n;
  }

  const std::vector<EncodingBlock>& blocks() const { return blocks_; }
  std::size_t n_variables() const { return blocks_.size(); }
  std::size_t n_spins() const { return n_spins_; }
  std::size_t n_nodes() const { return n_nodes_; }
  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << n_qubits_; }

  bool is_full() const {
    for (const auto& b : blocks_) {
      if (b.q_values.size() != 1 || b.q_values[0] != 0) return false;
    }
    return true;
  }

 private:
  static std::size_t spins_for(std::size_t n_nodes) {
    if (n_nodes < 1) throw std::invalid_argument("EncodingLayout: need at least one node");
    return n_nodes - 1;
  }

  std::vector<EncodingBlock> blocks_;
  std::size_t n_nodes_ = 1;
  std::size_t n_spins_ = 0;
  std::size_t n_qubits_ = 0;
};

// ---------------------------------------------------------------------------
// Diagonal unitary

struct DiagonalUnitary {
  std::vector<std::complex<double>> entries;

  std::size_t size() const { return entries.size(); }
  const std::complex<double>& operator[](std::size_t i) const { return entries[i]; }
};

/// diag(e^{i pi R(alpha_i, q)} ..., 1, ..., 1) of length 2^n_qubits.
inline DiagonalUnitary build_diagonal(std::span<const double> angles,
                                      const EncodingLayout& layout,
                                      const EncodingSpec& spec) {
  if (angles.size() != layout.n_variables()) {
    throw std::invalid_argument("build_diagonal: expected " +
                                std::to_string(layout.n_variables()) + " angles, got " +
                                std::to_string(angles.size()));
  }
  if (spec.kind == EncodingKind::Rf && static_cast<std::size_t>(spec.m) < layout.n_nodes()) {
    throw std::invalid_argument("build_diagonal: rf encoding needs m >= n_nodes");
  }
  DiagonalUnitary u;
  u.entries.assign(layout.dimension(), {1.0, 0.0});
  std::size_t j = 0;
  for (const auto& block : layout.blocks()) {
    const double a = angles[block.variable];
    for (int q : block.q_values) {
      u.entries[j++] = std::polar(1.0, std::numbers::pi * encode(a, q, spec));
    }
  }
  return u;
}

/// Rounds the encoded diagonal to spins. Entry j < n_nodes - 1 maps to the
/// sign of its real part (0 counts as +1); the gauge spin is always +1.
inline std::vector<int> spins_from_angles(std::span<const double> angles,
                                          const EncodingLayout& layout,
                                          const EncodingSpec& spec) {
  const DiagonalUnitary u = build_diagonal(angles, layout, spec);
  std::vector<int> spins(layout.n_nodes(), 1);
  for (std::size_t j = 0; j < layout.n_spins(); ++j) {
    spins[j] = u.entries[j].real() >= 0.0 ? 1 : -1;
  }
  return spins;
}

/// Plateau-center angles that realize the given spins.
///
/// `spins` holds at least the n_nodes - 1 free spins (a trailing gauge spin
/// is ignored). A block of size d realizes the word with bit q set iff its
/// q-th spin is -1, at alpha = (2t + 1) pi / 2^d where t reads the bits with
/// q = 0 as the most significant.
inline std::vector<double> angles_for_spins(std::span<const int> spins,
                                            const EncodingLayout& layout) {
  if (spins.size() < layout.n_spins()) {
    throw std::invalid_argument("angles_for_spins: too few spins");
  }
  std::vector<double> angles(layout.n_variables(), 0.0);
  std::size_t j = 0;
  for (const auto& block : layout.blocks()) {
    const int d = static_cast<int>(block.q_values.size());
    std::uint64_t t = 0;
    for (int q = 0; q < d; ++q) {
      if (spins[j++] < 0) t |= std::uint64_t{1} << (d - 1 - q);
    }
    angles[block.variable] = std::ldexp(static_cast<double>(2 * t + 1) * std::numbers::pi, -d);
  }
  return angles;
}

}  // namespace expq
