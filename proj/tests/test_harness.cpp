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

#include <doctest.h>

#include <cmath>

#include "sidelink/errors.hpp"

using namespace sidelink;

namespace {

// Small enough for the exhaustive oracle: 6!/(2!) * 2^4 = 5760 candidates.
ScenarioConfig small_config() {
  ScenarioConfig config;
  config.num_vehicles = 4;
  config.num_subframes = 6;
  config.slots_per_subframe = 2;
  config.seed = 2024;
  return config;
}

const std::vector<Algorithm> kEveryAlgorithm = {
    Algorithm::kGraph, Algorithm::kExhaustiveOracle, Algorithm::kGreedy,
    Algorithm::kRandom, Algorithm::kUnconstrained};

bool identical(const std::vector<TrialResult>& a,
               const std::vector<TrialResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].trial_index != b[t].trial_index) return false;
    if (a[t].runs.size() != b[t].runs.size()) return false;
    for (const auto& [algorithm, run] : a[t].runs) {
      const auto it = b[t].runs.find(algorithm);
      if (it == b[t].runs.end()) return false;
      if (run.total != it->second.total) return false;          // bit-exact
      if (run.vehicle_rates != it->second.vehicle_rates) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("run_trials produces indexed results for every algorithm") {
  const auto results = run_trials(small_config(), kEveryAlgorithm, 3, 11);
  REQUIRE(results.size() == 3);
  for (std::size_t t = 0; t < 3; ++t) {
    CHECK(results[t].trial_index == t);
    CHECK(results[t].runs.size() == kEveryAlgorithm.size());
    for (const auto& [algorithm, run] : results[t].runs) {
      CHECK(run.vehicle_rates.size() == 4);
      for (double rate : run.vehicle_rates) CHECK(rate >= 0.0);
    }
  }
}

TEST_CASE("run_trials is deterministic and worker-count independent") {
  const auto sequential =
      run_trials(small_config(), kEveryAlgorithm, 12, 99, {.workers = 1});
  const auto repeat =
      run_trials(small_config(), kEveryAlgorithm, 12, 99, {.workers = 1});
  const auto threaded =
      run_trials(small_config(), kEveryAlgorithm, 12, 99, {.workers = 4});
  CHECK(identical(sequential, repeat));
  CHECK(identical(sequential, threaded));
}

TEST_CASE("graph equals the exhaustive oracle on every trial") {
  const auto results = run_trials(small_config(), kEveryAlgorithm, 40, 5);
  for (const TrialResult& trial : results) {
    const double graph = trial.runs.at(Algorithm::kGraph).total;
    const double oracle = trial.runs.at(Algorithm::kExhaustiveOracle).total;
    CHECK(graph == doctest::Approx(oracle).epsilon(1e-9));
  }
}

TEST_CASE("per-trial dominance chain") {
  const auto results = run_trials(small_config(), kEveryAlgorithm, 60, 8);
  for (const TrialResult& trial : results) {
    const double graph = trial.runs.at(Algorithm::kGraph).total;
    CHECK(trial.runs.at(Algorithm::kUnconstrained).total >= graph - 1e-9);
    CHECK(graph >= trial.runs.at(Algorithm::kGreedy).total - 1e-9);
    CHECK(graph >= trial.runs.at(Algorithm::kRandom).total - 1e-9);
    CHECK(trial.runs.at(Algorithm::kGreedy).total >= 0.0);
  }
}

TEST_CASE("oracle above its cap is rejected up front") {
  ScenarioConfig config;  // defaults: N=100, S=100, K=7
  CHECK_THROWS_AS(
      run_trials(config, {Algorithm::kExhaustiveOracle}, 1, 1),
      oracle_cap_error);
}

TEST_CASE("run_trials argument validation") {
  CHECK_THROWS_AS(run_trials(small_config(), {Algorithm::kGraph}, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_trials(small_config(), {}, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("summarize implements the per-trial statistics") {
  TrialResult trial;
  trial.trial_index = 0;
  trial.runs[Algorithm::kGraph] = AlgorithmRun{{1.0, 2.0, 3.0}, 6.0};

  const MetricsSummary single = summarize({trial}, Algorithm::kGraph);
  CHECK(single.highest == doctest::Approx(3.0));
  CHECK(single.worst == doctest::Approx(1.0));
  CHECK(single.mean == doctest::Approx(2.0));
  CHECK(single.std == doctest::Approx(std::sqrt(2.0 / 3.0)));  // 0.8165

  // Averaging two identical trials changes nothing.
  const MetricsSummary doubled = summarize({trial, trial}, Algorithm::kGraph);
  CHECK(doubled.highest == single.highest);
  CHECK(doubled.worst == single.worst);
  CHECK(doubled.mean == single.mean);
  CHECK(doubled.std == single.std);

  TrialResult flat;
  flat.trial_index = 0;
  flat.runs[Algorithm::kGraph] = AlgorithmRun{{4.0, 4.0, 4.0, 4.0}, 16.0};
  const MetricsSummary degenerate = summarize({flat}, Algorithm::kGraph);
  CHECK(degenerate.highest == 4.0);
  CHECK(degenerate.worst == 4.0);
  CHECK(degenerate.mean == 4.0);
  CHECK(degenerate.std == 0.0);

  CHECK_THROWS_AS(summarize({}, Algorithm::kGraph), std::invalid_argument);
  CHECK_THROWS_AS(summarize({trial}, Algorithm::kGreedy),
                  std::invalid_argument);
}

TEST_CASE("summary ordering invariant holds on real runs") {
  const auto results = run_trials(small_config(), kEveryAlgorithm, 30, 77);
  for (Algorithm algorithm : kEveryAlgorithm) {
    const MetricsSummary summary = summarize(results, algorithm);
    CHECK(summary.worst <= summary.mean);
    CHECK(summary.mean <= summary.highest);
    CHECK(summary.std >= 0.0);
  }
}

TEST_CASE("density sweep emits one point per (count, algorithm)") {
  const std::vector<std::size_t> counts = {1, 2, 4};
  const std::vector<Algorithm> algorithms = {Algorithm::kGraph,
                                             Algorithm::kGreedy};
  const auto points =
      sweep_density(small_config(), counts, algorithms, 5, 3);
  REQUIRE(points.size() == counts.size() * algorithms.size());

  std::size_t index = 0;
  for (std::size_t count : counts)
    for (Algorithm algorithm : algorithms) {
      CHECK(points[index].num_vehicles == count);
      CHECK(points[index].algorithm == algorithm);
      CHECK(points[index].mean_worst_rate >= 0.0);
      ++index;
    }

  const auto repeat = sweep_density(small_config(), counts, algorithms, 5, 3);
  for (std::size_t p = 0; p < points.size(); ++p)
    CHECK(points[p].mean_worst_rate == repeat[p].mean_worst_rate);

  CHECK_THROWS_AS(
      sweep_density(small_config(), {7}, algorithms, 1, 3),
      infeasible_error);  // 7 vehicles > 6 subframes
}

TEST_CASE("empirical CDF counts pooled spectral efficiencies") {
  TrialResult trial;
  trial.trial_index = 0;
  trial.runs[Algorithm::kGraph] = AlgorithmRun{{2.0, 4.0, 4.0, 8.0}, 18.0};
  const std::vector<TrialResult> results = {trial};

  const std::vector<double> grid = {1.0, 2.0, 4.0, 9.0};
  const CdfSeries series =
      empirical_cdf(results, Algorithm::kGraph, grid, /*bandwidth_hz=*/1.0);
  CHECK(series.cdf == std::vector<double>{0.0, 0.25, 0.75, 1.0});

  for (std::size_t g = 1; g < series.cdf.size(); ++g)
    CHECK(series.cdf[g] >= series.cdf[g - 1]);

  const std::vector<double> bad_grid = {2.0, 1.0};
  CHECK_THROWS_AS(
      empirical_cdf(results, Algorithm::kGraph, bad_grid, 1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      empirical_cdf(results, Algorithm::kGreedy, grid, 1.0),
      std::invalid_argument);  // no samples for that algorithm
}

TEST_CASE("default grid spans 1..10 with 30 points") {
  const std::vector<double> grid = default_cdf_grid();
  REQUIRE(grid.size() == 30);
  CHECK(grid.front() == doctest::Approx(1.0));
  CHECK(grid.back() == doctest::Approx(10.0));
  for (std::size_t g = 1; g < grid.size(); ++g)
    CHECK(grid[g] - grid[g - 1] ==
          doctest::Approx(9.0 / 29.0).epsilon(1e-12));
}

TEST_CASE("bootstrap interval brackets the sample mean") {
  const std::vector<double> samples = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const Interval interval =
      bootstrap_mean_interval(samples, 2000, 0.95, 123);
  CHECK(interval.lo <= 5.5);
  CHECK(interval.hi >= 5.5);
  CHECK(interval.lo < interval.hi);

  const Interval repeat = bootstrap_mean_interval(samples, 2000, 0.95, 123);
  CHECK(interval.lo == repeat.lo);
  CHECK(interval.hi == repeat.hi);

  const std::vector<double> constant(20, 3.0);
  const Interval tight = bootstrap_mean_interval(constant, 500, 0.95, 1);
  CHECK(tight.lo == doctest::Approx(3.0));
  CHECK(tight.hi == doctest::Approx(3.0));

  CHECK_THROWS_AS(bootstrap_mean_interval({}, 100, 0.95, 1),
                  std::invalid_argument);
}

TEST_CASE("algorithm names round-trip") {
  for (Algorithm algorithm : kEveryAlgorithm)
    CHECK(algorithm_from_string(to_string(algorithm)) == algorithm);
  CHECK_THROWS_AS(algorithm_from_string("simulated-annealing"),
                  std::invalid_argument);
}
