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

#include "sidelink/run_config.hpp"

#include <doctest.h>

#include <sstream>

#include "sidelink/errors.hpp"
#include "sidelink/reports.hpp"

using namespace sidelink;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return load_run_config(in);
}

// Small, oracle-friendly experiment for the CSV emitters.
RunConfig tiny_config() {
  RunConfig config;
  config.scenario.num_vehicles = 3;
  config.scenario.num_subframes = 4;
  config.scenario.slots_per_subframe = 2;
  config.scenario.seed = 7;
  config.trials = 4;
  config.vehicle_counts = {1, 2, 3};
  return config;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("defaults match the documented experiment") {
  const RunConfig config;
  CHECK(config.scenario.num_vehicles == 100);
  CHECK(config.scenario.num_subframes == 100);
  CHECK(config.scenario.slots_per_subframe == 7);
  CHECK(config.scenario.data_bandwidth_hz == doctest::Approx(900e3));
  CHECK(config.scenario.sinr_mean_db == doctest::Approx(17.0));
  CHECK(config.trials == 1000);
  CHECK(config.algorithms.size() == 4);
  CHECK(config.oracle_cap == 10'000'000);
  CHECK(config.vehicle_counts ==
        std::vector<std::size_t>{10, 20, 30, 40, 50, 60, 70, 80, 90, 100});
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("INI parsing covers both sections") {
  const RunConfig config = parse(
      "# experiment\n"
      "[scenario]\n"
      "num_vehicles = 8\n"
      "num_subframes = 12\n"
      "slots_per_subframe = 3\n"
      "data_bandwidth_hz = 1.8e5\n"
      "sinr_model = distance-interference\n"
      "sinr_mean_db = 12.5\n"
      "sinr_std_db = 4\n"
      "sinr_clip_db = -5 25\n"
      "highway_length_m = 1500\n"
      "pathloss_exponent = 3.0\n"
      "seed = 99\n"
      "\n"
      "[run]\n"
      "trials = 25\n"
      "algorithms = graph, exhaustive-oracle, random\n"
      "out_dir = results\n"
      "workers = auto\n"
      "beta = 100\n"
      "oracle_cap = 50000\n"
      "greedy_order = shuffled\n"
      "vehicle_counts = 2, 4, 8\n");

  CHECK(config.scenario.num_vehicles == 8);
  CHECK(config.scenario.num_subframes == 12);
  CHECK(config.scenario.slots_per_subframe == 3);
  CHECK(config.scenario.data_bandwidth_hz == doctest::Approx(1.8e5));
  CHECK(config.scenario.sinr_model == SinrModel::kDistanceInterference);
  CHECK(config.scenario.sinr_mean_db == doctest::Approx(12.5));
  CHECK(config.scenario.sinr_std_db == doctest::Approx(4.0));
  CHECK(config.scenario.sinr_clip_db_min == doctest::Approx(-5.0));
  CHECK(config.scenario.sinr_clip_db_max == doctest::Approx(25.0));
  CHECK(config.scenario.highway_length_m == doctest::Approx(1500.0));
  CHECK(config.scenario.pathloss_exponent == doctest::Approx(3.0));
  CHECK(config.scenario.seed == 99);
  CHECK(config.trials == 25);
  CHECK(config.algorithms ==
        std::vector<Algorithm>{Algorithm::kGraph,
                               Algorithm::kExhaustiveOracle,
                               Algorithm::kRandom});
  CHECK(config.out_dir == "results");
  CHECK(config.workers == 0);
  CHECK(config.beta == doctest::Approx(100.0));
  CHECK(config.oracle_cap == 50'000);
  CHECK(config.greedy_order == GreedyOrder::kShuffled);
  CHECK(config.vehicle_counts == std::vector<std::size_t>{2, 4, 8});
}

TEST_CASE("the shipped example config loads and matches the defaults") {
  const RunConfig example =
      load_run_config_file(std::string(SIDELINK_SOURCE_DIR) +
                           "/configs/example.ini");
  const RunConfig defaults;
  CHECK(example.scenario.num_vehicles == defaults.scenario.num_vehicles);
  CHECK(example.scenario.sinr_model == defaults.scenario.sinr_model);
  CHECK(example.scenario.seed == defaults.scenario.seed);
  CHECK(example.trials == defaults.trials);
  CHECK(example.algorithms == defaults.algorithms);
  CHECK(example.vehicle_counts == defaults.vehicle_counts);
  CHECK(example.oracle_cap == defaults.oracle_cap);
}

TEST_CASE("unknown keys are hard errors") {
  CHECK_THROWS_AS(parse("[scenario]\nnum_vehicle = 5\n"), parse_error);
  CHECK_THROWS_AS(parse("[run]\ntrails = 10\n"), parse_error);
  CHECK_THROWS_AS(parse("[channel]\nfoo = 1\n"), parse_error);
  CHECK_THROWS_AS(parse("num_vehicles = 5\n"), parse_error);  // no section
  CHECK_THROWS_AS(parse("[scenario]\nnum_vehicles 5\n"), parse_error);
  CHECK_THROWS_AS(parse("[scenario\nnum_vehicles = 5\n"), parse_error);
}

TEST_CASE("malformed values are rejected with context") {
  CHECK_THROWS_AS(parse("[scenario]\nnum_vehicles = many\n"), parse_error);
  CHECK_THROWS_AS(parse("[scenario]\nnum_vehicles = -3\n"), parse_error);
  CHECK_THROWS_AS(parse("[scenario]\nsinr_mean_db = 17dB\n"), parse_error);
  CHECK_THROWS_AS(parse("[scenario]\nsinr_clip_db = 0\n"), parse_error);
  CHECK_THROWS_AS(parse("[scenario]\nsinr_clip_db = 0 30 60\n"), parse_error);
  CHECK_THROWS_AS(parse("[scenario]\nsinr_model = rician\n"), parse_error);
  CHECK_THROWS_AS(parse("[run]\nalgorithms = graph, annealing\n"),
                  parse_error);
  CHECK_THROWS_AS(parse("[run]\ngreedy_order = sorted\n"), parse_error);
  CHECK_THROWS_AS(parse("[run]\nworkers = lots\n"), parse_error);
}

TEST_CASE("config validation") {
  RunConfig config = tiny_config();
  config.trials = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = tiny_config();
  config.algorithms.clear();
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = tiny_config();
  config.beta = -2.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  // Sweep counts are checked by the sweep emitter, not globally, so a
  // simulate run with fewer subframes than the default counts still works.
  config = tiny_config();
  config.vehicle_counts = {5};  // exceeds 4 subframes
  CHECK_NOTHROW(config.validate());
  CHECK_THROWS_AS(sweep_to_csv(config), std::invalid_argument);

  config = tiny_config();
  config.vehicle_counts = {};
  CHECK_THROWS_AS(sweep_to_csv(config), std::invalid_argument);
}

TEST_CASE("format_number uses 6 significant digits") {
  CHECK(format_number(12.0) == "12");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1234567.0) == "1.23457e+06");
  CHECK(format_number(3.14159265) == "3.14159");
  CHECK(format_number(0.0) == "0");
}

TEST_CASE("fig4 CSV has one row per algorithm per unit") {
  const RunConfig config = tiny_config();
  const std::string csv = simulate_to_csv(config);
  CHECK(csv.rfind("algorithm,highest,worst,mean,std,unit\n", 0) == 0);
  CHECK(count_lines(csv) == 1 + config.algorithms.size() * 2);
  CHECK(csv.find("mbit_per_s") != std::string::npos);
  CHECK(csv.find("bit_per_s_per_hz") != std::string::npos);

  // Byte-identical rerun, also with a different worker count.
  CHECK(simulate_to_csv(config) == csv);
  RunConfig threaded = config;
  threaded.workers = 3;
  CHECK(simulate_to_csv(threaded) == csv);
}

TEST_CASE("fig5 CSV enumerates counts x algorithms") {
  const RunConfig config = tiny_config();
  const std::string csv = sweep_to_csv(config);
  CHECK(csv.rfind("num_vehicles,algorithm,mean_worst_rate\n", 0) == 0);
  CHECK(count_lines(csv) ==
        1 + config.vehicle_counts.size() * config.algorithms.size());
  CHECK(sweep_to_csv(config) == csv);
}

TEST_CASE("fig6 CSV covers the default grid and ends at cdf 1") {
  RunConfig config = tiny_config();
  config.algorithms = {Algorithm::kGraph, Algorithm::kGreedy};
  const std::string csv = cdf_to_csv(config);
  CHECK(csv.rfind("rate_bits_s_hz,algorithm,cdf\n", 0) == 0);
  // The unconstrained bound series is appended automatically.
  CHECK(count_lines(csv) == 1 + 30 * 3);
  CHECK(csv.find("unconstrained") != std::string::npos);

  // Every series reaches 1 at the last grid point (10 bits/s/Hz covers
  // the whole clipped range).
  std::istringstream lines(csv);
  std::string line;
  std::size_t closing = 0;
  while (std::getline(lines, line))
    if (line.rfind("10,", 0) == 0 && line.size() > 2)
      closing += line.substr(line.rfind(',') + 1) == "1";
  CHECK(closing == 3);

  CHECK(cdf_to_csv(config) == csv);
}
