// Copyright 2026 The sidelink-match Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve one instance, run the Monte Carlo
// experiments (fig4/fig5/fig6 CSV emitters), or self-check the solver.
//
// Exit codes: 0 success, 1 property/self-test failure, 2 config or parse
// error, 3 infeasible instance, 4 oracle cap exceeded.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sidelink/errors.hpp"
#include "sidelink/matching.hpp"
#include "sidelink/reports.hpp"
#include "sidelink/run_config.hpp"
#include "sidelink/selftest.hpp"

namespace {

using namespace sidelink;

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitOracleCap = 4;

// Optional command-line overrides on top of the config file.
struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> vehicles;
  std::optional<std::size_t> subframes;
  std::optional<std::size_t> slots;
  std::optional<std::string> algorithms;
  std::optional<std::string> out_dir;
  std::optional<std::string> workers;
  std::optional<double> beta;
};

void add_run_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "Experiment config file (INI)");
  cmd->add_option("--seed", o.seed, "Master seed override");
  cmd->add_option("--trials", o.trials, "Number of Monte Carlo trials");
  cmd->add_option("--vehicles", o.vehicles, "Vehicles per cluster");
  cmd->add_option("--subframes", o.subframes, "Subframes per period");
  cmd->add_option("--slots", o.slots, "Subchannels (slots) per subframe");
  cmd->add_option("--algorithms", o.algorithms,
                  "Comma-separated algorithm list");
  cmd->add_option("--out-dir", o.out_dir, "Output directory for CSV files");
  cmd->add_option("--workers", o.workers, "Worker threads (count or 'auto')");
  cmd->add_option("--beta", o.beta,
                  "Audit the smooth aggregation at this sharpness");
}

RunConfig build_config(const Overrides& o) {
  RunConfig config;
  if (!o.config_path.empty()) config = load_run_config_file(o.config_path);
  if (o.seed) config.scenario.seed = *o.seed;
  if (o.trials) config.trials = *o.trials;
  if (o.vehicles) config.scenario.num_vehicles = *o.vehicles;
  if (o.subframes) config.scenario.num_subframes = *o.subframes;
  if (o.slots) config.scenario.slots_per_subframe = *o.slots;
  if (o.algorithms) {
    config.algorithms.clear();
    std::istringstream list(*o.algorithms);
    std::string name;
    while (std::getline(list, name, ','))
      if (!name.empty()) config.algorithms.push_back(algorithm_from_string(name));
  }
  if (o.out_dir) config.out_dir = *o.out_dir;
  if (o.workers) {
    if (*o.workers == "auto")
      config.workers = 0;
    else
      config.workers = std::stoull(*o.workers);
  }
  if (o.beta) config.beta = *o.beta;
  config.validate();
  return config;
}

// One-line record of the effective experiment, so runs are attributable
// even when only the log survives.
void echo_config(const RunConfig& config) {
  std::cout << "config: vehicles=" << config.scenario.num_vehicles
            << " subframes=" << config.scenario.num_subframes
            << " slots=" << config.scenario.slots_per_subframe
            << " model=" << to_string(config.scenario.sinr_model)
            << " seed=" << config.scenario.seed
            << " trials=" << config.trials << " algorithms=";
  for (std::size_t a = 0; a < config.algorithms.size(); ++a)
    std::cout << (a ? "," : "") << to_string(config.algorithms[a]);
  std::cout << " greedy_order="
            << (config.greedy_order == GreedyOrder::kNatural ? "natural"
                                                             : "shuffled")
            << " workers=";
  if (config.workers == 0)
    std::cout << "auto";
  else
    std::cout << config.workers;
  std::cout << "\n";
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& bytes) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write '" + path.string() + "'");
  out << bytes;
  std::cout << "wrote " << path.string() << "\n";
}

void audit_smooth_aggregation(const RunConfig& config) {
  if (!config.beta) return;
  const ProblemInstance instance = generate_instance(config.scenario, 0);
  const AggregatedWeights agg = aggregate_max(instance);
  const Matrix smooth =
      smooth_aggregate(instance, SmoothMaxConfig{*config.beta});
  double max_gap = 0.0;
  for (std::size_t i = 0; i < smooth.rows(); ++i)
    for (std::size_t a = 0; a < smooth.cols(); ++a)
      max_gap = std::max(max_gap, smooth(i, a) - agg.d(i, a));
  const double bound =
      std::log(static_cast<double>(instance.slots_per_subframe())) /
      *config.beta;
  std::cout << "smooth-aggregation audit: beta=" << *config.beta
            << " max_gap=" << format_number(max_gap)
            << " bound=" << format_number(bound)
            << (max_gap <= bound ? " ok" : " VIOLATED") << "\n";
}

int cmd_solve(const std::string& instance_path, std::optional<double> beta) {
  const ProblemInstance instance = load_instance_file(instance_path);
  const SolveResult result = solve_constrained(instance);
  const FeasibilityReport report = check_feasible(instance, result.assignment);

  std::cout << "num_vehicles: " << instance.num_vehicles() << "\n";
  std::cout << "num_subframes: " << instance.num_subframes() << "\n";
  std::cout << "slots_per_subframe: " << instance.slots_per_subframe() << "\n";
  std::cout << "mapping:";
  for (std::size_t r : result.assignment.mapping) std::cout << ' ' << r;
  std::cout << "\nsubframes:";
  for (std::size_t r : result.assignment.mapping)
    std::cout << ' ' << instance.subframe_of(r);
  std::cout << "\nper_vehicle_rate_bits_s:";
  for (std::size_t i = 0; i < instance.num_vehicles(); ++i)
    std::cout << ' '
              << format_number(instance.weight(i, result.assignment[i]));
  std::cout << "\ntotal_value_bits_s: " << format_number(result.value) << "\n";
  std::cout << "feasible: " << (report.ok() ? "yes" : "no") << "\n";
  for (const std::string& violation : report.violations)
    std::cout << "violation: " << violation << "\n";

  if (beta) {
    const AggregatedWeights agg = aggregate_max(instance);
    const Matrix smooth = smooth_aggregate(instance, SmoothMaxConfig{*beta});
    double max_gap = 0.0;
    for (std::size_t i = 0; i < smooth.rows(); ++i)
      for (std::size_t a = 0; a < smooth.cols(); ++a)
        max_gap = std::max(max_gap, smooth(i, a) - agg.d(i, a));
    std::cout << "smooth_max_gap: " << format_number(max_gap) << "\n"
              << "smooth_max_bound: "
              << format_number(
                     std::log(static_cast<double>(
                         instance.slots_per_subframe())) /
                     *beta)
              << "\n";
  }
  return report.ok() ? kExitOk : kExitSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-free sidelink resource allocation solver and "
               "Monte Carlo experiment harness"};
  app.require_subcommand(1);

  // solve
  std::string instance_path;
  std::optional<double> solve_beta;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve one instance file (header 'N S K' + weight matrix)");
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_option("--beta", solve_beta,
                    "Also audit the smooth aggregation at this sharpness");

  // simulate / sweep / cdf
  Overrides sim_overrides, sweep_overrides, cdf_overrides;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo rate statistics per algorithm (fig4.csv)");
  add_run_options(simulate, sim_overrides);
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Worst-rate vs vehicle density sweep (fig5.csv)");
  add_run_options(sweep, sweep_overrides);
  CLI::App* cdf = app.add_subcommand(
      "cdf", "Pooled spectral-efficiency CDF per algorithm (fig6.csv)");
  add_run_options(cdf, cdf_overrides);

  // selftest
  bool quick = false;
  bool inject_fault = false;
  std::optional<std::uint64_t> selftest_seed;
  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run the solver property suites on random instances");
  selftest->add_flag("--quick", quick, "100 instances instead of 1000");
  selftest->add_option("--seed", selftest_seed, "Generator seed");
  selftest
      ->add_flag("--inject-fault", inject_fault,
                 "Corrupt the reduction to demonstrate failure reporting")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (*solve) return cmd_solve(instance_path, solve_beta);
    if (*simulate) {
      const RunConfig config = build_config(sim_overrides);
      echo_config(config);
      write_file(config.out_dir, "fig4.csv", simulate_to_csv(config));
      audit_smooth_aggregation(config);
      return kExitOk;
    }
    if (*sweep) {
      const RunConfig config = build_config(sweep_overrides);
      echo_config(config);
      write_file(config.out_dir, "fig5.csv", sweep_to_csv(config));
      return kExitOk;
    }
    if (*cdf) {
      const RunConfig config = build_config(cdf_overrides);
      echo_config(config);
      write_file(config.out_dir, "fig6.csv", cdf_to_csv(config));
      return kExitOk;
    }
    if (*selftest) {
      SelftestOptions options;
      options.num_instances = quick ? 100 : 1000;
      if (selftest_seed) options.seed = *selftest_seed;
      options.inject_fault = inject_fault;
      return run_selftest(options, std::cout);
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const oracle_cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSelftestFailure;
  }
  return kExitOk;
}
