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

#ifndef SIDELINK_RUN_CONFIG_HPP
#define SIDELINK_RUN_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sidelink/harness.hpp"
#include "sidelink/scenario.hpp"

namespace sidelink {

// Full experiment description: the scenario plus harness and output
// settings. Parsed from an INI-style file with [scenario] and [run]
// sections whose keys mirror the field names; unknown keys are hard
// errors so typos cannot silently change an experiment.
//
//   [scenario]
//   num_vehicles = 100
//   sinr_model = iid-lognormal
//   sinr_clip_db = 0 30
//   seed = 1
//
//   [run]
//   trials = 1000
//   algorithms = graph, greedy, random, unconstrained
//   workers = auto
struct RunConfig {
  ScenarioConfig scenario;
  std::size_t trials = 1000;
  std::vector<Algorithm> algorithms = {
      Algorithm::kGraph, Algorithm::kGreedy, Algorithm::kRandom,
      Algorithm::kUnconstrained};
  std::string out_dir = ".";
  std::size_t workers = 0;  // 0 = auto
  std::optional<double> beta;
  std::uint64_t oracle_cap = 10'000'000;
  GreedyOrder greedy_order = GreedyOrder::kNatural;
  std::vector<std::size_t> vehicle_counts = {10, 20, 30, 40, 50,
                                             60, 70, 80, 90, 100};

  TrialOptions trial_options() const {
    return TrialOptions{workers, greedy_order, oracle_cap};
  }

  // Throws std::invalid_argument / parse_error on violated invariants.
  void validate() const;
};

// Parse the INI-style format above. Throws parse_error on unknown
// sections/keys, malformed values, or I/O failure.
RunConfig load_run_config(std::istream& in);
RunConfig load_run_config_file(const std::string& path);

}  // namespace sidelink

#endif  // SIDELINK_RUN_CONFIG_HPP
