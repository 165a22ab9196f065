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


/// @file instance_io.hpp
/// @brief Benchmark problem instances and their flat text format.
///
/// An instance file starts with a header line
///
///     <family> <n> <param> <seed>
///
/// where family is one of random_qubo, tsp, maxcut_regular, param is the
/// density (random_qubo), the degree (maxcut_regular) or 0 (tsp), and seed is
/// the generator seed. The body depends on the family:
///
///   random_qubo     n lines of n matrix entries, row-major
///   tsp             n lines of n distances, then `penalty <A> <B>`
///   maxcut_regular  one `i j w` line per edge
///
/// Numbers are written in shortest round-trip form, so reading a file back
/// reproduces the instance bit for bit. Blank lines and lines starting with
/// '#' are ignored.

#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "expq/generators.hpp"
#include "expq/problems.hpp"
#include "expq/text.hpp"
#include "expq/tsp.hpp"

namespace expq {

enum class Family { RandomQubo, Tsp, MaxcutRegular };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::RandomQubo: return "random_qubo";
    case Family::Tsp: return "tsp";
    case Family::MaxcutRegular: return "maxcut_regular";
  }
  throw std::logic_error("unknown family");
}

inline Family parse_family(std::string_view s) {
  s = trim(s);
  if (s == "random_qubo" || s == "qubo") return Family::RandomQubo;
  if (s == "tsp") return Family::Tsp;
  if (s == "maxcut_regular" || s == "maxcut") return Family::MaxcutRegular;
  throw std::invalid_argument("unknown problem family '" + std::string(s) + "'");
}

struct Instance {
  Family family = Family::RandomQubo;
  std::size_t size = 0;
  double param = 0.0;
  std::uint64_t seed = 0;
  std::variant<Qubo, TspInstance, WeightedGraph> data;

  const Qubo& qubo() const { return std::get<Qubo>(data); }
  const TspInstance& tsp() const { return std::get<TspInstance>(data); }
  const WeightedGraph& graph() const { return std::get<WeightedGraph>(data); }
};

/// Draws an instance from the family's generator.
inline Instance make_instance(Family family, std::size_t size, double param, std::uint64_t seed) {
  Instance inst{family, size, param, seed, Qubo::zeros(0)};
  switch (family) {
    case Family::RandomQubo:
      inst.data = random_qubo(size, param, seed);
      break;
    case Family::Tsp:
      inst.param = 0.0;
      inst.data = random_tsp(size, seed);
      break;
    case Family::MaxcutRegular: {
      if (param < 0.0 || param != static_cast<double>(static_cast<std::size_t>(param))) {
        throw std::invalid_argument("maxcut_regular: degree must be a non-negative integer");
      }
      inst.data = random_regular_graph(size, static_cast<std::size_t>(param), seed);
      break;
    }
  }
  return inst;
}

namespace detail {

inline void write_matrix(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

/// Next line that is neither blank nor a comment, split into tokens.
inline bool next_tokens(std::istream& in, std::vector<std::string>& toks) {
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    toks = tokens(t);
    return true;
  }
  return false;
}

inline Matrix read_matrix(std::istream& in, std::size_t n) {
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<std::string> toks;
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_tokens(in, toks) || toks.size() != n) {
      throw std::runtime_error("instance file: expected " + std::to_string(n) + " entries on matrix row " +
                               std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_double(toks[j]);
    }
  }
  return m;
}

}  // namespace detail

inline void write_instance(std::ostream& out, const Instance& inst) {
  out << to_string(inst.family) << ' ' << inst.size << ' ' << format_double(inst.param) << ' '
      << inst.seed << '\n';
  switch (inst.family) {
    case Family::RandomQubo:
      detail::write_matrix(out, inst.qubo().matrix());
      break;
    case Family::Tsp:
      detail::write_matrix(out, inst.tsp().distances);
      out << "penalty " << format_double(inst.tsp().penalty_a) << ' '
          << format_double(inst.tsp().penalty_b) << '\n';
      break;
    case Family::MaxcutRegular:
      for (const Edge& e : inst.graph().edges()) {
        out << e.i << ' ' << e.j << ' ' << format_double(e.weight) << '\n';
      }
      break;
  }
}

inline Instance read_instance(std::istream& in) {
  std::vector<std::string> toks;
  if (!detail::next_tokens(in, toks) || toks.size() != 4) {
    throw std::runtime_error("instance file: bad header, expected '<family> <n> <param> <seed>'");
  }
  Instance inst{parse_family(toks[0]), parse_uint(toks[1]), parse_double(toks[2]), parse_uint(toks[3]),
                Qubo::zeros(0)};
  const std::size_t n = inst.size;
  switch (inst.family) {
    case Family::RandomQubo:
      inst.data = Qubo(detail::read_matrix(in, n));
      break;
    case Family::Tsp: {
      TspInstance t;
      t.distances = detail::read_matrix(in, n);
      if (!detail::next_tokens(in, toks) || toks.size() != 3 || toks[0] != "penalty") {
        throw std::runtime_error("instance file: expected 'penalty <A> <B>'");
      }
      t.penalty_a = parse_double(toks[1]);
      t.penalty_b = parse_double(toks[2]);
      t.validate();
      inst.data = std::move(t);
      break;
    }
    case Family::MaxcutRegular: {
      WeightedGraph g(n);
      while (detail::next_tokens(in, toks)) {
        if (toks.size() != 3) throw std::runtime_error("instance file: expected 'i j w' edge line");
        g.add_edge(parse_uint(toks[0]), parse_uint(toks[1]), parse_double(toks[2]));
      }
      inst.data = std::move(g);
      break;
    }
  }
  return inst;
}

inline void save_instance(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_instance(out, inst);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_instance(in);
}

}  // namespace expq
