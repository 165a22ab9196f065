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

/// @file genetic.hpp
/// @brief Real-coded genetic algorithm over angle vectors.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "expq/optimizers/objective.hpp"
#include "expq/rng.hpp"

namespace expq {

struct GeneticConfig {
  std::size_t population = 50;
  std::size_t tournament = 3;
  double crossover_p = 0.5;  // per-gene probability of taking parent A
  double mutation_sigma = std::numbers::pi / 8.0;
  double mutation_rate = 0.1;
  std::size_t elitism = 1;
  std::uint64_t max_generations = 400;
  /// Stop after this many generations without a new best (0 disables).
  std::uint64_t stall_generations = 100;
  std::uint64_t max_evals = kUnlimited;
  std::uint64_t seed = 0;
};

struct Individual {
  std::vector<double> genes;
  double fitness = std::numeric_limits<double>::infinity();
};

/// Generational GA on [0, 2pi)^k. Elites are carried over without
/// re-evaluation, so the best energy never increases between generations.
/// `iterations` counts generations after the initial population.
inline OptimizerReport genetic(Objective& obj, const GeneticConfig& cfg = {}) {
  return run_with_budget(obj, cfg.max_evals, [&](Objective& f) {
    Rng rng(cfg.seed);
    const std::size_t k = f.dim();
    const std::size_t pop_size = std::max<std::size_t>(cfg.population, 2);
    const std::size_t elites = std::min(cfg.elitism, pop_size);

    std::vector<Individual> pop(pop_size);
    for (auto& ind : pop) {
      ind.genes.resize(k);
      for (double& g : ind.genes) g = rng.uniform(0.0, kTwoPi);
      ind.fitness = f(ind.genes);
    }

    auto by_fitness = [](const Individual& a, const Individual& b) { return a.fitness < b.fitness; };
    auto select = [&]() -> const Individual& {
      std::size_t winner = rng.below(pop.size());
      for (std::size_t t = 1; t < cfg.tournament; ++t) {
        const std::size_t c = rng.below(pop.size());
        if (pop[c].fitness < pop[winner].fitness) winner = c;
      }
      return pop[winner];
    };

    double best = std::min_element(pop.begin(), pop.end(), by_fitness)->fitness;
    std::uint64_t stall = 0;
    for (std::uint64_t gen = 0; gen < cfg.max_generations; ++gen) {
      f.note_iteration();
      std::stable_sort(pop.begin(), pop.end(), by_fitness);
      std::vector<Individual> next(pop.begin(), pop.begin() + static_cast<std::ptrdiff_t>(elites));
      while (next.size() < pop_size) {
        const Individual& a = select();
        const Individual& b = select();
        Individual child;
        child.genes.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
          child.genes[i] = rng.bernoulli(cfg.crossover_p) ? a.genes[i] : b.genes[i];
          if (rng.bernoulli(cfg.mutation_rate)) {
            child.genes[i] = wrap_angle(child.genes[i] + rng.normal(0.0, cfg.mutation_sigma));
          }
        }
        child.fitness = f(child.genes);
        next.push_back(std::move(child));
      }
      pop = std::move(next);

      const double gen_best = std::min_element(pop.begin(), pop.end(), by_fitness)->fitness;
      if (gen_best < best) {
        best = gen_best;
        stall = 0;
      } else if (cfg.stall_generations > 0 && ++stall >= cfg.stall_generations) {
        break;
      }
    }
  });
}

}  // namespace expq
