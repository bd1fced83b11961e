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

#include "sidelink/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sidelink {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string simulate_to_csv(const RunConfig& config) {
  config.validate();
  const std::vector<TrialResult> results =
      run_trials(config.scenario, config.algorithms, config.trials,
                 config.scenario.seed, config.trial_options());

  std::ostringstream out;
  out << "algorithm,highest,worst,mean,std,unit\n";
  const struct {
    const char* name;
    double factor;
  } units[] = {
      {"mbit_per_s", 1e-6},
      {"bit_per_s_per_hz", 1.0 / config.scenario.data_bandwidth_hz},
  };
  for (Algorithm algorithm : config.algorithms) {
    const MetricsSummary base = summarize(results, algorithm);
    for (const auto& unit : units) {
      const MetricsSummary s = base.scaled(unit.factor);
      out << to_string(algorithm) << ',' << format_number(s.highest) << ','
          << format_number(s.worst) << ',' << format_number(s.mean) << ','
          << format_number(s.std) << ',' << unit.name << '\n';
    }
  }
  return out.str();
}

std::string sweep_to_csv(const RunConfig& config) {
  config.validate();
  if (config.vehicle_counts.empty())
    throw std::invalid_argument("config: vehicle_counts must be non-empty");
  for (std::size_t count : config.vehicle_counts)
    if (count < 1 || count > config.scenario.num_subframes)
      throw std::invalid_argument(
          "config: vehicle_counts entries must lie in [1, num_subframes]");
  const std::vector<SweepPoint> points =
      sweep_density(config.scenario, config.vehicle_counts, config.algorithms,
                    config.trials, config.scenario.seed,
                    config.trial_options());

  std::ostringstream out;
  out << "num_vehicles,algorithm,mean_worst_rate\n";
  for (const SweepPoint& point : points)
    out << point.num_vehicles << ',' << to_string(point.algorithm) << ','
        << format_number(point.mean_worst_rate * 1e-6) << '\n';
  return out.str();
}

std::string cdf_to_csv(const RunConfig& config) {
  config.validate();
  std::vector<Algorithm> algorithms = config.algorithms;
  if (std::find(algorithms.begin(), algorithms.end(),
                Algorithm::kUnconstrained) == algorithms.end())
    algorithms.push_back(Algorithm::kUnconstrained);

  const std::vector<TrialResult> results =
      run_trials(config.scenario, algorithms, config.trials,
                 config.scenario.seed, config.trial_options());
  const std::vector<double> grid = default_cdf_grid();

  std::vector<CdfSeries> series;
  series.reserve(algorithms.size());
  for (Algorithm algorithm : algorithms)
    series.push_back(empirical_cdf(results, algorithm, grid,
                                   config.scenario.data_bandwidth_hz));

  std::ostringstream out;
  out << "rate_bits_s_hz,algorithm,cdf\n";
  for (std::size_t g = 0; g < grid.size(); ++g)
    for (std::size_t a = 0; a < algorithms.size(); ++a)
      out << format_number(grid[g]) << ',' << to_string(algorithms[a]) << ','
          << format_number(series[a].cdf[g]) << '\n';
  return out.str();
}

}  // namespace sidelink
