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

#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "expq/problems.hpp"

namespace expq {

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct TracePoint {
  std::uint64_t eval = 0;
  double energy = 0.0;
};

struct OptimizerReport {
  std::vector<double> best_angles;  // empty for tabu
  BitVector best_bits;              // tabu only
  double best_energy = std::numeric_limits<double>::infinity();
  std::uint64_t evals = 0;
  std::uint64_t iterations = 0;
  bool budget_exhausted = false;
  std::vector<TracePoint> trace;
};

/// Thrown by Objective when a call would exceed the evaluation budget.
class BudgetExhausted : public std::exception {
 public:
  const char* what() const noexcept override { return "evaluation budget exhausted"; }
};

/// Counted, budgeted objective over angle vectors of fixed dimension.
///
/// Every call evaluates the wrapped function exactly once, appends to the
/// trace and updates the best point. A call that would push the evaluation
/// count past the budget throws BudgetExhausted instead of evaluating.
class Objective {
 public:
  using Function = std::function<double(std::span<const double>)>;

  Objective(Function f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}

  double operator()(std::span<const double> x) {
    if (x.size() != dim_) throw std::invalid_argument("Objective: wrong dimension");
    if (evals_ >= cap_) throw BudgetExhausted{};
    const double e = f_(x);
    trace_.push_back({evals_, e});
    ++evals_;
    if (e < best_energy_) {
      best_energy_ = e;
      best_point_.assign(x.begin(), x.end());
    }
    return e;
  }

  /// Caps the total number of evaluations. A cap of zero still admits the
  /// initial evaluation, so every run has a best point to report.
  void set_budget(std::uint64_t max_evals) { cap_ = max_evals == 0 ? 1 : max_evals; }
  std::uint64_t budget() const { return cap_; }
  std::uint64_t remaining() const { return cap_ - evals_; }
  bool exhausted() const { return evals_ >= cap_; }

  void note_iteration() { ++iterations_; }

  std::size_t dim() const { return dim_; }
  std::uint64_t evals() const { return evals_; }
  std::uint64_t iterations() const { return iterations_; }
  double best_energy() const { return best_energy_; }
  const std::vector<double>& best_point() const { return best_point_; }
  const std::vector<TracePoint>& trace() const { return trace_; }

 private:
  Function f_;
  std::size_t dim_;
  std::uint64_t cap_ = kUnlimited;
  std::uint64_t evals_ = 0;
  std::uint64_t iterations_ = 0;
  double best_energy_ = std::numeric_limits<double>::infinity();
  std::vector<double> best_point_;
  std::vector<TracePoint> trace_;
};

/// Runs `body(obj)` under an evaluation cap and assembles the report from
/// what the objective observed. Running out of budget ends the run normally.
template <class Body>
OptimizerReport run_with_budget(Objective& obj, std::uint64_t max_evals, Body&& body) {
  obj.set_budget(max_evals);
  OptimizerReport report;
  try {
    std::forward<Body>(body)(obj);
  } catch (const BudgetExhausted&) {
    report.budget_exhausted = true;
  }
  report.best_angles = obj.best_point();
  report.best_energy = obj.best_energy();
  report.evals = obj.evals();
  report.iterations = obj.iterations();
  report.trace = obj.trace();
  return report;
}

}  // namespace expq
