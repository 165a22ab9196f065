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


/// @file config.hpp
/// @brief Experiment configuration and its key-value file format.
///
/// A config file holds one `key = value` pair per line; `#` starts a
/// comment. Lists are comma separated. Recognized keys:
///
///     family      random_qubo | tsp | maxcut_regular
///     sizes       e.g. 15, 31
///     densities   random_qubo densities in [0, 1]
///     degrees     maxcut_regular degrees, or `auto` for nine values
///                 spread evenly over [0, n - 1]
///     samples     instances per (size, density or degree) cell
///     optimizers  any of altopt, nft, bh, ga, tabu
///     encoding    rf | rfprime
///     rf.m        sharpness of rf; 0 picks n_nodes + 5
///     rf.alpha0   as_written | natural_log
///     mode        exact | shots
///     shots       shots per measured group in shots mode
///     variables   angle variables for nft, bh and ga; 0 means one per entry
///     seed        master seed
///     output      CSV path for the result records
///     threads     worker threads; 0 uses every hardware thread
///
/// Optimizer settings use dotted keys: altopt.max_evals, nft.max_iters,
/// nft.max_evals, nft.reset_interval, bh.hops, bh.initial, bh.stepsize,
/// bh.interval, bh.target_accept, bh.factor, bh.temperature, bh.rhobeg
/// (`auto` for variables / 2^(n_nodes - 1)), bh.rhoend, bh.local_max_evals,
/// bh.max_evals, ga.population, ga.tournament, ga.crossover_p,
/// ga.mutation_sigma, ga.mutation_rate, ga.elitism, ga.max_generations,
/// ga.stall_generations, ga.max_evals, tabu.tenure, tabu.restart_after,
/// tabu.sweeps, tabu.max_moves.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "expq/encoding.hpp"
#include "expq/instance_io.hpp"
#include "expq/optimizers.hpp"
#include "expq/simulator.hpp"
#include "expq/text.hpp"

namespace expq {

enum class OptimizerKind { AltOpt, Nft, BasinHopping, Genetic, Tabu };

inline constexpr OptimizerKind kAllOptimizers[] = {OptimizerKind::AltOpt, OptimizerKind::Nft,
                                                   OptimizerKind::BasinHopping, OptimizerKind::Genetic,
                                                   OptimizerKind::Tabu};

inline std::string to_string(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::AltOpt: return "altopt";
    case OptimizerKind::Nft: return "nft";
    case OptimizerKind::BasinHopping: return "bh";
    case OptimizerKind::Genetic: return "ga";
    case OptimizerKind::Tabu: return "tabu";
  }
  throw std::logic_error("unknown optimizer");
}

inline OptimizerKind parse_optimizer(std::string_view s) {
  s = trim(s);
  for (OptimizerKind k : kAllOptimizers) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown optimizer '" + std::string(s) + "' (expected altopt, nft, bh, ga or tabu)");
}

inline EncodingKind parse_encoding(std::string_view s) {
  s = trim(s);
  if (s == "rf") return EncodingKind::Rf;
  if (s == "rfprime" || s == "rf_prime") return EncodingKind::RfPrime;
  throw std::invalid_argument("unknown encoding '" + std::string(s) + "' (expected rf or rfprime)");
}

struct OptimizerParams {
  AltOptConfig altopt;
  NftConfig nft;
  BasinHoppingConfig bh;
  bool bh_auto_rhobeg = true;
  GeneticConfig ga;
  TabuConfig tabu;
};

struct ExperimentConfig {
  Family family = Family::RandomQubo;
  std::vector<std::size_t> sizes;
  std::vector<double> densities;
  std::vector<std::size_t> degrees;  // empty: nine evenly spread values per size
  std::size_t samples = 1;
  std::vector<OptimizerKind> optimizers{OptimizerKind::AltOpt};
  OptimizerParams params;
  EncodingKind encoding = EncodingKind::RfPrime;
  int rf_m = 0;
  Alpha0Variant alpha0 = Alpha0Variant::AsWritten;
  EvalMode mode = EvalMode::exact();
  std::size_t shots = 1024;
  std::size_t variables = 0;
  std::uint64_t seed = 0;
  std::string output = "results.csv";
  std::size_t threads = 0;

  void validate() const {
    if (sizes.empty()) throw std::invalid_argument("config: sizes must not be empty");
    for (std::size_t n : sizes) {
      if (n < 1) throw std::invalid_argument("config: sizes must be at least 1");
    }
    if (samples < 1) throw std::invalid_argument("config: samples must be at least 1");
    if (optimizers.empty()) throw std::invalid_argument("config: no optimizers selected");
    if (family == Family::RandomQubo) {
      if (densities.empty()) throw std::invalid_argument("config: random_qubo needs densities");
      for (double d : densities) {
        if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("config: densities must lie in [0, 1]");
      }
    }
    if (family == Family::Tsp) {
      for (std::size_t n : sizes) {
        if (n < 3) throw std::invalid_argument("config: tsp sizes must be at least 3");
      }
    }
    if (rf_m < 0) throw std::invalid_argument("config: rf.m must be non-negative");
  }

  EncodingSpec encoding_for(std::size_t n_nodes) const {
    if (encoding == EncodingKind::RfPrime) return EncodingSpec::rf_prime();
    return EncodingSpec::rf(rf_m > 0 ? rf_m : default_rf_m(n_nodes), alpha0);
  }
};

/// Nine degrees spread evenly over [0, n - 1], rounded to the nearest
/// integer.
inline std::vector<std::size_t> degree_grid(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= 8; ++i) {
    out.push_back(static_cast<std::size_t>(std::floor(static_cast<double>(i * (n - 1)) / 8.0 + 0.5)));
  }
  return out;
}

/// Density or degree values of the cells for one size.
inline std::vector<double> cell_params(const ExperimentConfig& cfg, std::size_t size) {
  switch (cfg.family) {
    case Family::RandomQubo:
      return cfg.densities;
    case Family::Tsp:
      return {0.0};
    case Family::MaxcutRegular: {
      const auto degrees = cfg.degrees.empty() ? degree_grid(size) : cfg.degrees;
      return std::vector<double>(degrees.begin(), degrees.end());
    }
  }
  return {};
}

namespace detail {

template <class T>
std::vector<T> parse_list(std::string_view value, T (*parse)(std::string_view)) {
  std::vector<T> out;
  for (const auto& item : split(value, ',')) {
    if (!item.empty()) out.push_back(parse(item));
  }
  return out;
}

inline std::size_t parse_size(std::string_view s) { return static_cast<std::size_t>(parse_uint(s)); }
inline double parse_real(std::string_view s) { return parse_double(s); }
inline OptimizerKind parse_opt(std::string_view s) { return parse_optimizer(s); }

}  // namespace detail

/// Applies one `key = value` setting. Throws on unknown keys and bad values.
inline void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  auto u64 = [&] { return parse_uint(value); };
  auto real = [&] { return parse_double(value); };
  auto size = [&] { return static_cast<std::size_t>(parse_uint(value)); };
  OptimizerParams& p = cfg.params;

  if (key == "family") cfg.family = parse_family(value);
  else if (key == "sizes") cfg.sizes = detail::parse_list<std::size_t>(value, detail::parse_size);
  else if (key == "densities") cfg.densities = detail::parse_list<double>(value, detail::parse_real);
  else if (key == "degrees") {
    cfg.degrees = value == "auto" ? std::vector<std::size_t>{}
                                  : detail::parse_list<std::size_t>(value, detail::parse_size);
  }
  else if (key == "samples") cfg.samples = size();
  else if (key == "optimizers") cfg.optimizers = detail::parse_list<OptimizerKind>(value, detail::parse_opt);
  else if (key == "encoding") cfg.encoding = parse_encoding(value);
  else if (key == "rf.m") cfg.rf_m = static_cast<int>(u64());
  else if (key == "rf.alpha0") {
    if (value == "as_written") cfg.alpha0 = Alpha0Variant::AsWritten;
    else if (value == "natural_log") cfg.alpha0 = Alpha0Variant::NaturalLog;
    else throw std::invalid_argument("rf.alpha0 must be as_written or natural_log");
  }
  else if (key == "mode") {
    if (value == "exact") cfg.mode = EvalMode::exact();
    else if (value == "shots") cfg.mode = EvalMode::sampled(cfg.shots);
    else throw std::invalid_argument("mode must be exact or shots");
  }
  else if (key == "shots") {
    cfg.shots = size();
    if (cfg.shots == 0) throw std::invalid_argument("shots must be positive");
    if (!cfg.mode.is_exact()) cfg.mode = EvalMode::sampled(cfg.shots);
  }
  else if (key == "variables") cfg.variables = size();
  else if (key == "seed") cfg.seed = u64();
  else if (key == "output") cfg.output = std::string(value);
  else if (key == "threads") cfg.threads = size();
  else if (key == "altopt.max_evals") p.altopt.max_evals = u64();
  else if (key == "nft.max_iters") p.nft.max_iters = u64();
  else if (key == "nft.max_evals") p.nft.max_evals = u64();
  else if (key == "nft.reset_interval") p.nft.reset_interval = u64();
  else if (key == "bh.hops") p.bh.hops = u64();
  else if (key == "bh.initial") p.bh.initial = real();
  else if (key == "bh.stepsize") p.bh.stepsize = real();
  else if (key == "bh.interval") p.bh.interval = u64();
  else if (key == "bh.target_accept") p.bh.target_accept = real();
  else if (key == "bh.factor") p.bh.factor = real();
  else if (key == "bh.temperature") p.bh.temperature = real();
  else if (key == "bh.rhobeg") {
    p.bh_auto_rhobeg = value == "auto";
    if (!p.bh_auto_rhobeg) p.bh.rhobeg = real();
  }
  else if (key == "bh.rhoend") p.bh.rhoend = real();
  else if (key == "bh.local_max_evals") p.bh.local_max_evals = u64();
  else if (key == "bh.max_evals") p.bh.max_evals = u64();
  else if (key == "ga.population") p.ga.population = size();
  else if (key == "ga.tournament") p.ga.tournament = size();
  else if (key == "ga.crossover_p") p.ga.crossover_p = real();
  else if (key == "ga.mutation_sigma") p.ga.mutation_sigma = real();
  else if (key == "ga.mutation_rate") p.ga.mutation_rate = real();
  else if (key == "ga.elitism") p.ga.elitism = size();
  else if (key == "ga.max_generations") p.ga.max_generations = u64();
  else if (key == "ga.stall_generations") p.ga.stall_generations = u64();
  else if (key == "ga.max_evals") p.ga.max_evals = u64();
  else if (key == "tabu.tenure") p.tabu.tenure = size();
  else if (key == "tabu.restart_after") p.tabu.restart_after = u64();
  else if (key == "tabu.sweeps") p.tabu.sweeps = u64();
  else if (key == "tabu.max_moves") p.tabu.max_moves = u64();
  else throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      apply_setting(cfg, text.substr(0, eq), text.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  return parse_config(in);
}

enum class TableName { T1, T2, T3 };
enum class Scale { Desk, Full };

inline TableName parse_table(std::string_view s) {
  if (s == "t1") return TableName::T1;
  if (s == "t2") return TableName::T2;
  if (s == "t3") return TableName::T3;
  throw std::invalid_argument("unknown table '" + std::string(s) + "' (expected t1, t2 or t3)");
}

inline Scale parse_scale(std::string_view s) {
  if (s == "desk") return Scale::Desk;
  if (s == "full") return Scale::Full;
  throw std::invalid_argument("unknown scale '" + std::string(s) + "' (expected desk or full)");
}

/// Benchmark presets. t1: random QUBOs, t2: TSP, t3: MaxCut on regular
/// graphs. Desk scale keeps sizes up to 31 and five samples per cell.
inline ExperimentConfig table_preset(TableName table, Scale scale) {
  ExperimentConfig cfg;
  cfg.samples = 20;
  cfg.optimizers.assign(std::begin(kAllOptimizers), std::end(kAllOptimizers));
  switch (table) {
    case TableName::T1:
      cfg.family = Family::RandomQubo;
      cfg.sizes = {15, 31, 63, 127};
      for (int i = 1; i <= 9; ++i) cfg.densities.push_back(i / 10.0);
      break;
    case TableName::T2:
      cfg.family = Family::Tsp;
      cfg.sizes = {3, 5, 7, 9, 11};
      break;
    case TableName::T3:
      cfg.family = Family::MaxcutRegular;
      cfg.sizes = {16, 32, 64, 128};
      cfg.optimizers = {OptimizerKind::AltOpt, OptimizerKind::Nft, OptimizerKind::BasinHopping,
                        OptimizerKind::Genetic};
      break;
  }
  if (scale == Scale::Desk) {
    std::erase_if(cfg.sizes, [](std::size_t n) { return n > 31; });
    cfg.samples = 5;
  }
  return cfg;
}

}  // namespace expq
