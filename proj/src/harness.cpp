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

#include "sidelink/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "sidelink/baselines.hpp"
#include "sidelink/errors.hpp"
#include "sidelink/matching.hpp"

namespace sidelink {

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGraph:
      return "graph";
    case Algorithm::kExhaustiveOracle:
      return "exhaustive-oracle";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kRandom:
      return "random";
    case Algorithm::kUnconstrained:
      return "unconstrained";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "graph") return Algorithm::kGraph;
  if (name == "exhaustive-oracle") return Algorithm::kExhaustiveOracle;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "random") return Algorithm::kRandom;
  if (name == "unconstrained") return Algorithm::kUnconstrained;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

namespace {

AlgorithmRun make_run(const ProblemInstance& instance,
                      const SolveResult& solved) {
  AlgorithmRun run;
  run.vehicle_rates.resize(instance.num_vehicles());
  for (std::size_t i = 0; i < instance.num_vehicles(); ++i)
    run.vehicle_rates[i] = instance.weight(i, solved.assignment[i]);
  run.total = solved.value;
  return run;
}

TrialResult run_one_trial(const ScenarioConfig& config,
                          const std::vector<Algorithm>& algorithms,
                          std::uint64_t trial, const TrialOptions& options) {
  const ProblemInstance instance = generate_instance(config, trial);
  TrialResult result;
  result.trial_index = trial;
  for (Algorithm algorithm : algorithms) {
    SolveResult solved;
    switch (algorithm) {
      case Algorithm::kGraph:
        solved = solve_constrained(instance);
        break;
      case Algorithm::kExhaustiveOracle: {
        OracleResult oracle =
            brute_force_constrained(instance, options.oracle_cap);
        solved = SolveResult{oracle.assignment, oracle.value};
        break;
      }
      case Algorithm::kGreedy: {
        if (options.greedy_order == GreedyOrder::kNatural) {
          solved = solve_greedy(instance);
        } else {
          std::vector<std::size_t> order(instance.num_vehicles());
          std::iota(order.begin(), order.end(), 0);
          RngStream rng =
              trial_stream(config.seed, trial, kGreedyOrderStream);
          for (std::size_t i = 0; i + 1 < order.size(); ++i)
            std::swap(order[i],
                      order[i + rng.next_below(order.size() - i)]);
          solved = solve_greedy(instance, order);
        }
        break;
      }
      case Algorithm::kRandom: {
        RngStream rng =
            trial_stream(config.seed, trial, kRandomBaselineStream);
        solved = solve_random(instance, rng);
        break;
      }
      case Algorithm::kUnconstrained:
        solved = solve_unconstrained(instance);
        break;
    }
    result.runs.emplace(algorithm, make_run(instance, solved));
  }
  return result;
}

}  // namespace

std::vector<TrialResult> run_trials(ScenarioConfig config,
                                    const std::vector<Algorithm>& algorithms,
                                    std::size_t num_trials,
                                    std::uint64_t master_seed,
                                    const TrialOptions& options) {
  if (num_trials < 1)
    throw std::invalid_argument("run_trials: num_trials must be >= 1");
  if (algorithms.empty())
    throw std::invalid_argument("run_trials: no algorithms requested");
  config.seed = master_seed;
  config.validate();

  if (std::find(algorithms.begin(), algorithms.end(),
                Algorithm::kExhaustiveOracle) != algorithms.end() &&
      feasible_count(config.num_vehicles, config.num_subframes,
                     config.slots_per_subframe) > options.oracle_cap)
    throw oracle_cap_error(
        "instance too large for oracle: feasible count exceeds cap " +
        std::to_string(options.oracle_cap));

  std::size_t workers = options.workers != 0
                            ? options.workers
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, num_trials);

  // Results are keyed by trial index into a preallocated vector, so the
  // reduction is order-independent and any worker count produces the
  // same bytes.
  std::vector<TrialResult> results(num_trials);
  std::atomic<std::size_t> next_trial{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    for (;;) {
      const std::size_t t = next_trial.fetch_add(1);
      if (t >= num_trials) return;
      try {
        results[t] = run_one_trial(config, algorithms, t, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

MetricsSummary summarize(const std::vector<TrialResult>& results,
                         Algorithm algorithm) {
  if (results.empty())
    throw std::invalid_argument("summarize: no trial results");
  MetricsSummary summary;
  for (const TrialResult& trial : results) {
    const auto it = trial.runs.find(algorithm);
    if (it == trial.runs.end())
      throw std::invalid_argument("summarize: algorithm '" +
                                  to_string(algorithm) + "' missing in trial " +
                                  std::to_string(trial.trial_index));
    const std::vector<double>& rates = it->second.vehicle_rates;
    const double mean =
        std::accumulate(rates.begin(), rates.end(), 0.0) / rates.size();
    double var = 0.0;
    for (double r : rates) var += (r - mean) * (r - mean);
    var /= rates.size();  // population variance
    summary.highest += *std::max_element(rates.begin(), rates.end());
    summary.worst += *std::min_element(rates.begin(), rates.end());
    summary.mean += mean;
    summary.std += std::sqrt(var);
  }
  const double inv = 1.0 / static_cast<double>(results.size());
  return summary.scaled(inv);
}

std::vector<SweepPoint> sweep_density(const ScenarioConfig& config,
                                      const std::vector<std::size_t>& counts,
                                      const std::vector<Algorithm>& algorithms,
                                      std::size_t num_trials,
                                      std::uint64_t master_seed,
                                      const TrialOptions& options) {
  for (std::size_t count : counts)
    if (count < 1 || count > config.num_subframes)
      throw infeasible_error("sweep: vehicle count " + std::to_string(count) +
                             " outside [1, " +
                             std::to_string(config.num_subframes) + "]");

  std::vector<SweepPoint> points;
  points.reserve(counts.size() * algorithms.size());
  for (std::size_t count : counts) {
    ScenarioConfig scenario = config;
    scenario.num_vehicles = count;
    const std::vector<TrialResult> results =
        run_trials(scenario, algorithms, num_trials, master_seed, options);
    for (Algorithm algorithm : algorithms)
      points.push_back(
          {count, algorithm, summarize(results, algorithm).worst});
  }
  return points;
}

CdfSeries empirical_cdf(const std::vector<TrialResult>& results,
                        Algorithm algorithm, std::span<const double> grid,
                        double bandwidth_hz) {
  for (std::size_t g = 1; g < grid.size(); ++g)
    if (!(grid[g] > grid[g - 1]))
      throw std::invalid_argument("empirical_cdf: grid not increasing");

  std::vector<double> pooled;
  for (const TrialResult& trial : results) {
    const auto it = trial.runs.find(algorithm);
    if (it == trial.runs.end()) continue;
    for (double rate : it->second.vehicle_rates)
      pooled.push_back(rate / bandwidth_hz);
  }
  if (pooled.empty())
    throw std::invalid_argument("empirical_cdf: no samples for algorithm '" +
                                to_string(algorithm) + "'");
  std::sort(pooled.begin(), pooled.end());

  CdfSeries series;
  series.grid.assign(grid.begin(), grid.end());
  series.cdf.reserve(grid.size());
  for (double g : grid) {
    const auto at_most =
        std::upper_bound(pooled.begin(), pooled.end(), g) - pooled.begin();
    series.cdf.push_back(static_cast<double>(at_most) /
                         static_cast<double>(pooled.size()));
  }
  return series;
}

std::vector<double> default_cdf_grid() {
  std::vector<double> grid(30);
  for (std::size_t g = 0; g < grid.size(); ++g)
    grid[g] = 1.0 + 9.0 * static_cast<double>(g) / 29.0;
  return grid;
}

Interval bootstrap_mean_interval(std::span<const double> samples,
                                 std::size_t num_resamples, double confidence,
                                 std::uint64_t seed) {
  if (samples.empty())
    throw std::invalid_argument("bootstrap: no samples");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::invalid_argument("bootstrap: confidence must be in (0,1)");

  RngStream rng(seed);
  const std::size_t n = samples.size();
  std::vector<double> means(num_resamples);
  for (double& m : means) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += samples[rng.next_below(n)];
    m = sum / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  const double alpha = (1.0 - confidence) / 2.0;
  const auto pick = [&](double q) {
    const auto idx = static_cast<std::size_t>(
        q * static_cast<double>(num_resamples - 1) + 0.5);
    return means[std::min(idx, num_resamples - 1)];
  };
  return Interval{pick(alpha), pick(1.0 - alpha)};
}

}  // namespace sidelink
