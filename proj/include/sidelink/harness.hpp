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

#ifndef SIDELINK_HARNESS_HPP
#define SIDELINK_HARNESS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sidelink/scenario.hpp"

namespace sidelink {

enum class Algorithm {
  kGraph,             // aggregation + Kuhn-Munkres (optimal, constrained)
  kExhaustiveOracle,  // capped brute force, reference only
  kGreedy,            // first-come-first-served baseline
  kRandom,            // uniform feasible assignment baseline
  kUnconstrained      // conflict-oblivious upper bound
};

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);

enum class GreedyOrder { kNatural, kShuffled };

// One algorithm's outcome on one trial instance.
struct AlgorithmRun {
  std::vector<double> vehicle_rates;  // bits/s, length = num_vehicles
  double total = 0.0;
};

struct TrialResult {
  std::uint64_t trial_index = 0;
  std::map<Algorithm, AlgorithmRun> runs;
};

// The fig4.csv statistics, all in bits/s: per trial the max / min / mean
// / population-std over the vehicle rate vector, each averaged across
// trials.
struct MetricsSummary {
  double highest = 0.0;
  double worst = 0.0;
  double mean = 0.0;
  double std = 0.0;

  // Unit conversion (e.g. 1e-6 for Mbit/s, 1/bandwidth for bits/s/Hz).
  MetricsSummary scaled(double factor) const {
    return {highest * factor, worst * factor, mean * factor, std * factor};
  }
};

struct CdfSeries {
  std::vector<double> grid;  // spectral efficiency, bits/s/Hz, increasing
  std::vector<double> cdf;   // Pr(sample <= grid[g])
};

struct SweepPoint {
  std::size_t num_vehicles = 0;
  Algorithm algorithm = Algorithm::kGraph;
  double mean_worst_rate = 0.0;  // bits/s
};

struct TrialOptions {
  std::size_t workers = 0;  // 0 = one per hardware thread
  GreedyOrder greedy_order = GreedyOrder::kNatural;
  std::uint64_t oracle_cap = 10'000'000;
};

// Run `num_trials` independent trials. Trial t solves the instance
// generate_instance(config[seed=master_seed], t) with every requested
// algorithm, so all algorithms see identical channels. Trials execute on
// a worker pool; because each trial derives its own random streams from
// (master_seed, trial), the result is bit-identical for any worker count.
//
// Requesting the exhaustive oracle on an instance shape above the cap
// throws oracle_cap_error up front.
std::vector<TrialResult> run_trials(ScenarioConfig config,
                                    const std::vector<Algorithm>& algorithms,
                                    std::size_t num_trials,
                                    std::uint64_t master_seed,
                                    const TrialOptions& options = {});

MetricsSummary summarize(const std::vector<TrialResult>& results,
                         Algorithm algorithm);

// Rerun the harness at each vehicle count and record the mean worst-rate
// per algorithm (the fig5.csv sweep). Counts must not exceed the subframe
// budget.
std::vector<SweepPoint> sweep_density(const ScenarioConfig& config,
                                      const std::vector<std::size_t>& counts,
                                      const std::vector<Algorithm>& algorithms,
                                      std::size_t num_trials,
                                      std::uint64_t master_seed,
                                      const TrialOptions& options = {});

// Pool every per-vehicle spectral efficiency (rate / bandwidth) across
// trials and evaluate Pr(sample <= g) on the grid.
CdfSeries empirical_cdf(const std::vector<TrialResult>& results,
                        Algorithm algorithm, std::span<const double> grid,
                        double bandwidth_hz);

// 30 evenly spaced spectral-efficiency points spanning 1..10 bits/s/Hz.
std::vector<double> default_cdf_grid();

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Percentile bootstrap confidence interval for the mean of `samples`.
Interval bootstrap_mean_interval(std::span<const double> samples,
                                 std::size_t num_resamples, double confidence,
                                 std::uint64_t seed);

}  // namespace sidelink

#endif  // SIDELINK_HARNESS_HPP
