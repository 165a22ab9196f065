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


/// @file records.hpp
/// @brief Result records, their CSV form, and aggregation into table rows.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "expq/harness/config.hpp"
#include "expq/text.hpp"

namespace expq {

/// One optimizer run on one instance.
struct ResultRecord {
  std::string problem_id;
  std::string family;
  std::size_t size = 0;
  double density_or_degree = 0.0;
  std::string optimizer;
  std::string encoding;
  std::uint64_t seed = 0;
  double energy = 0.0;
  std::optional<double> cut_value;
  std::optional<bool> feasible;
  std::uint64_t evals = 0;
  std::uint64_t iterations = 0;
  std::uint64_t wall_time_ms = 0;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

inline constexpr const char* kRecordHeader =
    "problem_id,family,size,density_or_degree,optimizer,encoding,seed,energy,cut_value,feasible,evals,"
    "iterations,wall_time_ms";

inline void write_record(std::ostream& out, const ResultRecord& r) {
  out << r.problem_id << ',' << r.family << ',' << r.size << ',' << format_double(r.density_or_degree) << ','
      << r.optimizer << ',' << r.encoding << ',' << r.seed << ',' << format_double(r.energy) << ',';
  if (r.cut_value) out << format_double(*r.cut_value);
  out << ',';
  if (r.feasible) out << (*r.feasible ? "true" : "false");
  out << ',' << r.evals << ',' << r.iterations << ',' << r.wall_time_ms << '\n';
}

inline void emit_csv(std::ostream& out, const std::vector<ResultRecord>& records) {
  out << kRecordHeader << '\n';
  for (const auto& r : records) write_record(out, r);
}

inline void emit_csv(const std::string& path, const std::vector<ResultRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_csv(out, records);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

inline ResultRecord parse_record(std::string_view line) {
  const auto f = split(line, ',');
  if (f.size() != 13) {
    throw std::invalid_argument("results CSV: expected 13 fields, got " + std::to_string(f.size()));
  }
  ResultRecord r;
  r.problem_id = f[0];
  r.family = f[1];
  r.size = static_cast<std::size_t>(parse_uint(f[2]));
  r.density_or_degree = parse_double(f[3]);
  r.optimizer = f[4];
  r.encoding = f[5];
  r.seed = parse_uint(f[6]);
  r.energy = parse_double(f[7]);
  if (!f[8].empty()) r.cut_value = parse_double(f[8]);
  if (f[9] == "true") r.feasible = true;
  else if (f[9] == "false") r.feasible = false;
  else if (!f[9].empty()) throw std::invalid_argument("results CSV: feasible must be true, false or empty");
  r.evals = parse_uint(f[10]);
  r.iterations = parse_uint(f[11]);
  r.wall_time_ms = parse_uint(f[12]);
  return r;
}

inline std::vector<ResultRecord> parse_csv(std::istream& in) {
  std::vector<ResultRecord> out;
  std::string line;
  if (!std::getline(in, line)) return out;
  if (trim(line) != kRecordHeader) throw std::invalid_argument("results CSV: unexpected header");
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_record(trim(line)));
  }
  return out;
}

inline std::vector<ResultRecord> load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_csv(in);
}

// ---------------------------------------------------------------------------

struct AggregateRow {
  std::string family;
  std::size_t size = 0;
  std::string optimizer;
  std::size_t count = 0;
  double mean_energy = 0.0;
  double mean_evals = 0.0;
  std::optional<double> mean_cut;
  std::optional<double> feasibility_rate;
};

namespace detail {

inline int optimizer_rank(const std::string& name) {
  for (std::size_t i = 0; i < std::size(kAllOptimizers); ++i) {
    if (name == to_string(kAllOptimizers[i])) return static_cast<int>(i);
  }
  return static_cast<int>(std::size(kAllOptimizers));
}

}  // namespace detail

/// Means per (family, size, optimizer), pooling densities or degrees.
/// Rows are sorted by family, size, then optimizer. The feasibility rate and
/// mean cut are present when every pooled record carries them.
inline std::vector<AggregateRow> aggregate(const std::vector<ResultRecord>& records) {
  if (records.empty()) throw std::invalid_argument("aggregate: no records");
  using Key = std::tuple<std::string, std::size_t, int, std::string>;
  struct Acc {
    std::size_t n = 0, n_cut = 0, n_feas = 0, n_ok = 0;
    double energy = 0.0, evals = 0.0, cut = 0.0;
  };
  std::map<Key, Acc> groups;
  for (const auto& r : records) {
    Acc& a = groups[{r.family, r.size, detail::optimizer_rank(r.optimizer), r.optimizer}];
    ++a.n;
    a.energy += r.energy;
    a.evals += static_cast<double>(r.evals);
    if (r.cut_value) {
      ++a.n_cut;
      a.cut += *r.cut_value;
    }
    if (r.feasible) {
      ++a.n_feas;
      if (*r.feasible) ++a.n_ok;
    }
  }
  std::vector<AggregateRow> rows;
  for (const auto& [key, a] : groups) {
    AggregateRow row;
    row.family = std::get<0>(key);
    row.size = std::get<1>(key);
    row.optimizer = std::get<3>(key);
    row.count = a.n;
    const double n = static_cast<double>(a.n);
    row.mean_energy = a.energy / n;
    row.mean_evals = a.evals / n;
    if (a.n_cut == a.n) row.mean_cut = a.cut / n;
    if (a.n_feas == a.n) row.feasibility_rate = static_cast<double>(a.n_ok) / n;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline constexpr const char* kAggregateHeader =
    "family,size,optimizer,count,mean_energy,mean_evals,mean_cut,feasibility_rate";

inline void emit_rows(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << kAggregateHeader << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << r.size << ',' << r.optimizer << ',' << r.count << ','
        << format_double(r.mean_energy) << ',' << format_double(r.mean_evals) << ',';
    if (r.mean_cut) out << format_double(*r.mean_cut);
    out << ',';
    if (r.feasibility_rate) out << format_double(*r.feasibility_rate);
    out << '\n';
  }
}

inline void emit_rows(const std::string& path, const std::vector<AggregateRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_rows(out, rows);
}

}  // namespace expq
