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


// expq: generate instances, run benchmark configs, aggregate and verify
// results.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "expq/expq.hpp"

namespace {

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::vector<std::string> optimizers;
  std::optional<std::string> encoding;
  std::optional<std::string> mode;
  std::optional<std::size_t> shots;
  std::optional<std::size_t> threads;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "Master seed");
    app->add_option("--out", out, "Output path");
    app->add_option("--optimizer", optimizers, "altopt, nft, bh, ga or tabu (repeatable)")->take_all();
    app->add_option("--encoding", encoding, "rf or rfprime");
    app->add_option("--mode", mode, "exact or shots");
    app->add_option("--shots", shots, "Shots per measured group (default 1024)");
    app->add_option("--threads", threads, "Worker threads, 0 for all cores");
  }

  void apply(expq::ExperimentConfig& cfg) const {
    if (seed) cfg.seed = *seed;
    if (out) cfg.output = *out;
    if (!optimizers.empty()) {
      cfg.optimizers.clear();
      for (const auto& o : optimizers) cfg.optimizers.push_back(expq::parse_optimizer(o));
    }
    if (encoding) cfg.encoding = expq::parse_encoding(*encoding);
    if (shots) expq::apply_setting(cfg, "shots", std::to_string(*shots));
    if (mode) expq::apply_setting(cfg, "mode", *mode);
    if (threads) cfg.threads = *threads;
  }
};

void print_rows(const std::vector<expq::ResultRecord>& records) {
  if (records.empty()) {
    std::cout << "no records\n";
    return;
  }
  expq::emit_rows(std::cout, expq::aggregate(records));
}

int cmd_gen(const std::optional<std::string>& config_path, const std::string& family, std::size_t size,
            double param, const CommonFlags& flags) {
  if (config_path) {
    expq::ExperimentConfig cfg = expq::load_config(*config_path);
    flags.apply(cfg);
    cfg.validate();
    const std::filesystem::path dir = flags.out ? *flags.out : "instances";
    std::filesystem::create_directories(dir);
    std::size_t written = 0;
    for (const auto& t : expq::instance_tasks(cfg)) {
      const auto inst = expq::make_instance(cfg.family, t.size, t.param, t.seed);
      const auto name = expq::problem_id(cfg.family, t.size, t.param, t.sample) + ".txt";
      expq::save_instance((dir / name).string(), inst);
      ++written;
    }
    std::cout << "wrote " << written << " instances to " << dir.string() << "\n";
    return 0;
  }
  if (size == 0) throw std::invalid_argument("gen: --size is required without --config");
  const auto inst = expq::make_instance(expq::parse_family(family), size, param, flags.seed.value_or(0));
  if (flags.out) {
    expq::save_instance(*flags.out, inst);
  } else {
    expq::write_instance(std::cout, inst);
  }
  return 0;
}

int cmd_run(const std::string& config_path, const CommonFlags& flags) {
  expq::ExperimentConfig cfg = expq::load_config(config_path);
  flags.apply(cfg);
  const auto records = expq::run_to_file(cfg);
  std::cerr << "wrote " << records.size() << " records to " << cfg.output << "\n";
  print_rows(records);
  return 0;
}

int cmd_aggregate(const std::string& in, const std::optional<std::string>& out) {
  const auto rows = expq::aggregate(expq::load_csv(in));
  if (out) {
    expq::emit_rows(*out, rows);
  } else {
    expq::emit_rows(std::cout, rows);
  }
  return 0;
}

int cmd_reproduce(const std::string& table, const std::string& scale, const CommonFlags& flags) {
  expq::ExperimentConfig cfg = expq::table_preset(expq::parse_table(table), expq::parse_scale(scale));
  cfg.output = table + "_" + scale + ".csv";
  flags.apply(cfg);
  const auto records = expq::run_to_file(cfg);
  std::cerr << "wrote " << records.size() << " records to " << cfg.output << "\n";
  print_rows(records);
  return 0;
}

int cmd_verify(const std::optional<std::string>& config_path, const std::optional<std::string>& table,
               const std::optional<std::string>& scale, const std::string& in, double fraction,
               const CommonFlags& flags) {
  expq::ExperimentConfig cfg;
  if (config_path) {
    cfg = expq::load_config(*config_path);
  } else if (table) {
    cfg = expq::table_preset(expq::parse_table(*table), expq::parse_scale(scale.value_or("desk")));
  }
  flags.apply(cfg);
  const auto records = expq::load_csv(in);
  const auto report = expq::verify_records(cfg, records, fraction, flags.seed.value_or(0));
  for (const auto& m : report.mismatches) {
    std::cout << "MISMATCH " << m.stored.problem_id << ' ' << m.stored.optimizer << ": stored energy "
              << expq::format_double(m.stored.energy) << " evals " << m.stored.evals << ", recomputed energy "
              << expq::format_double(m.recomputed.energy) << " evals " << m.recomputed.evals << "\n";
  }
  std::cout << "verified " << report.checked << " of " << records.size() << " records, "
            << report.mismatches.size() << " mismatches\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational binary optimization with exponentially fewer qubits"};
  app.require_subcommand(1);

  CommonFlags gen_flags, run_flags, rep_flags, ver_flags;
  std::optional<std::string> gen_config;
  std::string gen_family = "random_qubo";
  std::size_t gen_size = 0;
  double gen_param = 0.5;
  auto* gen = app.add_subcommand("gen", "Write problem instances");
  gen->add_option("--config", gen_config, "Write every instance of this config into the --out directory");
  gen->add_option("--family", gen_family, "random_qubo, tsp or maxcut_regular");
  gen->add_option("--size", gen_size, "Problem size");
  gen->add_option("--param", gen_param, "Density (random_qubo) or degree (maxcut_regular)");
  gen_flags.attach(gen);

  std::string run_config;
  auto* run = app.add_subcommand("run", "Run a config file, resuming from existing output");
  run->add_option("config", run_config, "Config file")->required();
  run_flags.attach(run);

  std::string agg_in;
  std::optional<std::string> agg_out;
  auto* agg = app.add_subcommand("aggregate", "Average records per family, size and optimizer");
  agg->add_option("input", agg_in, "Results CSV")->required();
  agg->add_option("--out", agg_out, "Output CSV (default stdout)");

  std::string rep_table, rep_scale = "desk";
  auto* rep = app.add_subcommand("reproduce", "Run a benchmark table preset");
  rep->add_option("--table", rep_table, "t1, t2 or t3")->required();
  rep->add_option("--scale", rep_scale, "desk or full");
  rep_flags.attach(rep);

  std::optional<std::string> ver_config, ver_table, ver_scale;
  std::string ver_in;
  double ver_fraction = 0.01;
  auto* ver = app.add_subcommand("verify", "Recompute a sample of stored records");
  ver->add_option("input", ver_in, "Results CSV")->required();
  ver->add_option("--config", ver_config, "Config the records were produced with");
  ver->add_option("--table", ver_table, "Preset the records were produced with");
  ver->add_option("--scale", ver_scale, "Preset scale");
  ver->add_option("--fraction", ver_fraction, "Fraction of records to recompute (default 0.01)");
  ver_flags.attach(ver);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_gen(gen_config, gen_family, gen_size, gen_param, gen_flags);
    if (*run) return cmd_run(run_config, run_flags);
    if (*agg) return cmd_aggregate(agg_in, agg_out);
    if (*rep) return cmd_reproduce(rep_table, rep_scale, rep_flags);
    if (*ver) return cmd_verify(ver_config, ver_table, ver_scale, ver_in, ver_fraction, ver_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
