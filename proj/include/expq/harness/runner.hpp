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


/// @file runner.hpp
/// @brief Runs optimizers on benchmark instances and collects records.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "expq/encoding.hpp"
#include "expq/harness/config.hpp"
#include "expq/harness/records.hpp"
#include "expq/instance_io.hpp"
#include "expq/optimizers.hpp"
#include "expq/problems.hpp"
#include "expq/simulator.hpp"

namespace expq {

/// Seed of one instance, a hash of the master seed and the cell coordinates.
inline std::uint64_t cell_seed(std::uint64_t master, Family family, std::size_t size, double param,
                               std::size_t sample) {
  return SeedHasher(master)
      .add(to_string(family))
      .add(static_cast<std::uint64_t>(size))
      .add(param)
      .add(static_cast<std::uint64_t>(sample))
      .value();
}

inline std::uint64_t run_seed(std::uint64_t cell, OptimizerKind kind, std::string_view stream) {
  return SeedHasher(cell).add(to_string(kind)).add(stream).value();
}

inline std::string problem_id(Family family, std::size_t size, double param, std::size_t sample) {
  return to_string(family) + "-n" + std::to_string(size) + "-p" + format_double(param) + "-s" +
         std::to_string(sample);
}

/// Family metrics of a binary solution.
struct Outcome {
  double energy = 0.0;
  std::optional<double> cut_value;
  std::optional<bool> feasible;
};

/// An instance reduced to a MaxCut graph for the ansatz, plus the QUBO that
/// tabu search works on.
///
/// For QUBO-based families the graph has a gauge node appended after the
/// n problem variables and energy = affine.energy(cut). For MaxCut the
/// graph is the instance itself, the last node is the gauge, and the
/// energy is -cut.
class ProblemSetup {
 public:
  explicit ProblemSetup(const Instance& inst) : family_(inst.family) {
    switch (inst.family) {
      case Family::RandomQubo:
        qubo_ = inst.qubo();
        break;
      case Family::Tsp: {
        TspQubo t = tsp_qubo(inst.tsp());
        qubo_ = t.qubo;
        n_cities_ = t.n_cities;
        break;
      }
      case Family::MaxcutRegular:
        graph_ = inst.graph();
        affine_ = {0.0, 1.0};
        qubo_ = maxcut_to_qubo(graph_);
        return;
    }
    MaxCutReduction r = ising_to_maxcut(qubo_to_ising(qubo_));
    graph_ = std::move(r.graph);
    affine_ = r.affine;
  }

  const WeightedGraph& graph() const { return graph_; }
  const CutAffine& affine() const { return affine_; }
  const Qubo& qubo() const { return qubo_; }
  Family family() const { return family_; }

  /// Metrics of the spins on the ansatz graph (gauge spin last).
  Outcome from_spins(std::span<const int> v) const {
    if (family_ == Family::MaxcutRegular) {
      const double cut = cut_value(graph_, v);
      return {-cut, cut, std::nullopt};
    }
    return from_bits(bits_from_spins(v, qubo_.size()));
  }

  /// Metrics of a solution to qubo().
  Outcome from_bits(std::span<const std::uint8_t> x) const {
    if (family_ == Family::MaxcutRegular) {
      const SpinVector v = spins_from_bits(x);
      const double cut = cut_value(graph_, v);
      return {-cut, cut, std::nullopt};
    }
    Outcome o{qubo_energy(qubo_, x), std::nullopt, std::nullopt};
    if (family_ == Family::Tsp) o.feasible = tsp_feasible(x, n_cities_);
    return o;
  }

 private:
  Family family_;
  WeightedGraph graph_;
  CutAffine affine_;
  Qubo qubo_ = Qubo::zeros(0);
  std::size_t n_cities_ = 0;
};

struct RunResult {
  OptimizerReport report;
  Outcome outcome;
  std::uint64_t wall_time_ms = 0;
};

/// Runs one optimizer on one instance. Deterministic given the cell seed.
inline RunResult run_optimizer(const ExperimentConfig& cfg, const ProblemSetup& setup, OptimizerKind kind,
                               std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  if (kind == OptimizerKind::Tabu) {
    TabuConfig tc = cfg.params.tabu;
    tc.seed = run_seed(seed, kind, "optimizer");
    out.report = tabu_search(setup.qubo(), tc);
    out.outcome = setup.from_bits(out.report.best_bits);
  } else {
    const std::size_t n_nodes = setup.graph().n_nodes();
    const EncodingLayout layout =
        kind == OptimizerKind::AltOpt || cfg.variables == 0
            ? EncodingLayout::full(n_nodes)
            : EncodingLayout::compact(n_nodes, std::min(cfg.variables, n_nodes - 1));
    const DiagonalAnsatz ansatz(setup.graph(), layout, cfg.encoding_for(n_nodes));
    EvalCounter counter;
    Rng shot_rng(run_seed(seed, kind, "shots"));
    const CutAffine affine = setup.affine();
    Objective obj(
        [&](std::span<const double> a) {
          return affine.energy(ansatz_energy(ansatz, a, cfg.mode, counter, &shot_rng));
        },
        layout.n_variables());
    const std::uint64_t opt_seed = run_seed(seed, kind, "optimizer");
    switch (kind) {
      case OptimizerKind::AltOpt:
        out.report = altopt(obj, layout, cfg.params.altopt);
        break;
      case OptimizerKind::Nft: {
        NftConfig c = cfg.params.nft;
        c.seed = opt_seed;
        out.report = nft(obj, c);
        break;
      }
      case OptimizerKind::BasinHopping: {
        BasinHoppingConfig c = cfg.params.bh;
        c.seed = opt_seed;
        if (cfg.params.bh_auto_rhobeg) c.rhobeg = basinhopping_rhobeg(layout.n_variables(), n_nodes);
        out.report = basinhopping(obj, c);
        break;
      }
      case OptimizerKind::Genetic: {
        GeneticConfig c = cfg.params.ga;
        c.seed = opt_seed;
        out.report = genetic(obj, c);
        break;
      }
      case OptimizerKind::Tabu:
        break;
    }
    out.outcome = setup.from_spins(spins_from_angles(out.report.best_angles, layout, ansatz.spec()));
  }
  out.wall_time_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return out;
}

inline ResultRecord make_record(const ExperimentConfig& cfg, Family family, std::size_t size, double param,
                                std::size_t sample, std::uint64_t seed, OptimizerKind kind,
                                const RunResult& run) {
  ResultRecord r;
  r.problem_id = problem_id(family, size, param, sample);
  r.family = to_string(family);
  r.size = size;
  r.density_or_degree = param;
  r.optimizer = to_string(kind);
  r.encoding = kind == OptimizerKind::Tabu ? "none" : to_string(cfg.encoding);
  r.seed = seed;
  r.energy = run.outcome.energy;
  r.cut_value = run.outcome.cut_value;
  r.feasible = run.outcome.feasible;
  r.evals = run.report.evals;
  r.iterations = run.report.iterations;
  r.wall_time_ms = run.wall_time_ms;
  return r;
}

struct InstanceTask {
  std::size_t size = 0;
  double param = 0.0;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
};

/// Every instance of the config in (size, param, sample) order.
inline std::vector<InstanceTask> instance_tasks(const ExperimentConfig& cfg) {
  std::vector<InstanceTask> tasks;
  for (std::size_t size : cfg.sizes) {
    for (double param : cell_params(cfg, size)) {
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        tasks.push_back({size, param, s, cell_seed(cfg.seed, cfg.family, size, param, s)});
      }
    }
  }
  return tasks;
}

namespace detail {

using RecordKey = std::tuple<std::string, std::string, std::string>;

inline RecordKey record_key(const ResultRecord& r) { return {r.problem_id, r.optimizer, r.encoding}; }

/// Calls `work(i)` for i in [0, n) on up to `threads` workers (0: hardware
/// concurrency). The first exception thrown by any call is rethrown.
template <class Work>
void parallel_for(std::size_t n, std::size_t threads, Work&& work) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Runs every (instance, optimizer) pair of the config that is not already
/// in `existing`. Returns all records in (size, param, sample, optimizer)
/// order, reusing existing ones; existing records outside the config are
/// appended unchanged.
inline std::vector<ResultRecord> run_experiment(const ExperimentConfig& cfg,
                                                const std::vector<ResultRecord>& existing = {}) {
  cfg.validate();
  const auto tasks = instance_tasks(cfg);
  std::map<detail::RecordKey, const ResultRecord*> have;
  for (const auto& r : existing) have.emplace(detail::record_key(r), &r);

  const std::size_t n_opt = cfg.optimizers.size();
  std::vector<std::optional<ResultRecord>> slots(tasks.size() * n_opt);
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    for (std::size_t o = 0; o < n_opt; ++o) {
      ResultRecord probe;
      probe.problem_id = problem_id(cfg.family, tasks[t].size, tasks[t].param, tasks[t].sample);
      probe.optimizer = to_string(cfg.optimizers[o]);
      probe.encoding = cfg.optimizers[o] == OptimizerKind::Tabu ? "none" : to_string(cfg.encoding);
      if (auto it = have.find(detail::record_key(probe)); it != have.end()) slots[t * n_opt + o] = *it->second;
    }
  }

  detail::parallel_for(tasks.size(), cfg.threads, [&](std::size_t t) {
    const InstanceTask& task = tasks[t];
    bool pending = false;
    for (std::size_t o = 0; o < n_opt; ++o) pending = pending || !slots[t * n_opt + o];
    if (!pending) return;
    const Instance inst = make_instance(cfg.family, task.size, task.param, task.seed);
    const ProblemSetup setup(inst);
    for (std::size_t o = 0; o < n_opt; ++o) {
      if (slots[t * n_opt + o]) continue;
      const RunResult run = run_optimizer(cfg, setup, cfg.optimizers[o], task.seed);
      slots[t * n_opt + o] =
          make_record(cfg, cfg.family, task.size, task.param, task.sample, task.seed, cfg.optimizers[o], run);
    }
  });

  std::vector<ResultRecord> out;
  std::set<detail::RecordKey> emitted;
  for (auto& s : slots) {
    emitted.insert(detail::record_key(*s));
    out.push_back(std::move(*s));
  }
  for (const auto& r : existing) {
    if (!emitted.count(detail::record_key(r))) out.push_back(r);
  }
  return out;
}

/// Runs the config and writes the records to cfg.output, resuming from the
/// records already stored there.
inline std::vector<ResultRecord> run_to_file(const ExperimentConfig& cfg) {
  std::vector<ResultRecord> existing;
  if (std::filesystem::exists(cfg.output)) existing = load_csv(cfg.output);
  auto records = run_experiment(cfg, existing);
  emit_csv(cfg.output, records);
  return records;
}

struct VerifyMismatch {
  ResultRecord stored;
  ResultRecord recomputed;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<VerifyMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Recomputes a random fraction of the records (at least one) from their
/// stored seed and parameters and compares energy, metrics and eval counts.
/// Optimizer settings and the evaluation mode come from `cfg`.
inline VerifyReport verify_records(const ExperimentConfig& cfg, const std::vector<ResultRecord>& records,
                                   double fraction, std::uint64_t seed) {
  VerifyReport report;
  if (records.empty()) return report;
  if (!(fraction > 0.0 && fraction <= 1.0)) throw std::invalid_argument("verify: fraction must lie in (0, 1]");
  const auto n = records.size();
  const auto k = std::min<std::size_t>(n, std::max<std::size_t>(1, static_cast<std::size_t>(
                                                                       std::ceil(fraction * static_cast<double>(n)))));
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());

  std::vector<std::optional<VerifyMismatch>> found(k);
  detail::parallel_for(k, cfg.threads, [&](std::size_t i) {
    const ResultRecord& r = records[idx[i]];
    ExperimentConfig local = cfg;
    local.family = parse_family(r.family);
    if (r.encoding != "none") local.encoding = parse_encoding(r.encoding);
    const OptimizerKind kind = parse_optimizer(r.optimizer);
    const Instance inst = make_instance(local.family, r.size, r.density_or_degree, r.seed);
    const RunResult run = run_optimizer(local, ProblemSetup(inst), kind, r.seed);
    ResultRecord again = r;
    again.energy = run.outcome.energy;
    again.cut_value = run.outcome.cut_value;
    again.feasible = run.outcome.feasible;
    again.evals = run.report.evals;
    again.iterations = run.report.iterations;
    const double tol = 1e-9 * std::max(1.0, std::abs(r.energy));
    const bool same = std::abs(again.energy - r.energy) <= tol && again.feasible == r.feasible &&
                      again.cut_value.has_value() == r.cut_value.has_value() &&
                      (!r.cut_value || std::abs(*again.cut_value - *r.cut_value) <= tol) &&
                      again.evals == r.evals && again.iterations == r.iterations;
    if (!same) found[i] = VerifyMismatch{r, again};
  });
  report.checked = k;
  for (auto& m : found) {
    if (m) report.mismatches.push_back(std::move(*m));
  }
  return report;
}

}  // namespace expq
