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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "sidelink/errors.hpp"

namespace sidelink {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
    --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream stream(s);
  while (std::getline(stream, item, sep)) parts.push_back(trim(item));
  return parts;
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t consumed = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &consumed);
  } catch (const std::exception&) {
    throw parse_error("config: key '" + key + "' has non-numeric value '" +
                      value + "'");
  }
  if (consumed != value.size())
    throw parse_error("config: key '" + key + "' has trailing characters in '" +
                      value + "'");
  return parsed;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  if (value.empty() || value[0] == '-')
    throw parse_error("config: key '" + key + "' must be a non-negative "
                      "integer, got '" + value + "'");
  std::size_t consumed = 0;
  std::uint64_t parsed = 0;
  try {
    parsed = std::stoull(value, &consumed);
  } catch (const std::exception&) {
    throw parse_error("config: key '" + key + "' has non-integer value '" +
                      value + "'");
  }
  if (consumed != value.size())
    throw parse_error("config: key '" + key + "' has trailing characters in '" +
                      value + "'");
  return parsed;
}

void apply_scenario_key(ScenarioConfig& scenario, const std::string& key,
                        const std::string& value) {
  if (key == "num_vehicles") {
    scenario.num_vehicles = parse_u64(key, value);
  } else if (key == "num_subframes") {
    scenario.num_subframes = parse_u64(key, value);
  } else if (key == "slots_per_subframe") {
    scenario.slots_per_subframe = parse_u64(key, value);
  } else if (key == "data_bandwidth_hz") {
    scenario.data_bandwidth_hz = parse_double(key, value);
  } else if (key == "sinr_model") {
    try {
      scenario.sinr_model = sinr_model_from_string(value);
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string("config: ") + e.what());
    }
  } else if (key == "sinr_mean_db") {
    scenario.sinr_mean_db = parse_double(key, value);
  } else if (key == "sinr_std_db") {
    scenario.sinr_std_db = parse_double(key, value);
  } else if (key == "sinr_clip_db") {
    std::istringstream pair(value);
    double lo = 0.0, hi = 0.0;
    std::string rest;
    if (!(pair >> lo >> hi) || (pair >> rest))
      throw parse_error("config: sinr_clip_db wants two numbers, got '" +
                        value + "'");
    scenario.sinr_clip_db_min = lo;
    scenario.sinr_clip_db_max = hi;
  } else if (key == "highway_length_m") {
    scenario.highway_length_m = parse_double(key, value);
  } else if (key == "pathloss_exponent") {
    scenario.pathloss_exponent = parse_double(key, value);
  } else if (key == "seed") {
    scenario.seed = parse_u64(key, value);
  } else {
    throw parse_error("config: unknown key '" + key + "' in [scenario]");
  }
}

void apply_run_key(RunConfig& config, const std::string& key,
                   const std::string& value) {
  if (key == "trials") {
    config.trials = parse_u64(key, value);
  } else if (key == "algorithms") {
    config.algorithms.clear();
    for (const std::string& name : split(value, ',')) {
      if (name.empty()) continue;
      try {
        config.algorithms.push_back(algorithm_from_string(name));
      } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("config: ") + e.what());
      }
    }
  } else if (key == "out_dir") {
    config.out_dir = value;
  } else if (key == "workers") {
    config.workers = value == "auto" ? 0 : parse_u64(key, value);
  } else if (key == "beta") {
    config.beta = parse_double(key, value);
  } else if (key == "oracle_cap") {
    config.oracle_cap = parse_u64(key, value);
  } else if (key == "greedy_order") {
    if (value == "natural")
      config.greedy_order = GreedyOrder::kNatural;
    else if (value == "shuffled")
      config.greedy_order = GreedyOrder::kShuffled;
    else
      throw parse_error("config: greedy_order must be natural|shuffled, got '" +
                        value + "'");
  } else if (key == "vehicle_counts") {
    config.vehicle_counts.clear();
    for (const std::string& item : split(value, ','))
      if (!item.empty())
        config.vehicle_counts.push_back(parse_u64(key, item));
  } else {
    throw parse_error("config: unknown key '" + key + "' in [run]");
  }
}

}  // namespace

void RunConfig::validate() const {
  scenario.validate();
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (algorithms.empty())
    throw std::invalid_argument("config: algorithms must be non-empty");
  if (beta && (!(*beta > 0.0) || !std::isfinite(*beta)))
    throw std::invalid_argument("config: beta must be positive and finite");
}

RunConfig load_run_config(std::istream& in) {
  RunConfig config;
  std::string line;
  std::string section;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    if (text.front() == '[') {
      if (text.back() != ']')
        throw parse_error("config: unterminated section header at line " +
                          std::to_string(line_number));
      section = trim(text.substr(1, text.size() - 2));
      if (section != "scenario" && section != "run")
        throw parse_error("config: unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw parse_error("config: expected 'key = value' at line " +
                        std::to_string(line_number));
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (section.empty())
      throw parse_error("config: key '" + key + "' before any section");
    if (section == "scenario")
      apply_scenario_key(config.scenario, key, value);
    else
      apply_run_key(config, key, value);
  }
  return config;
}

RunConfig load_run_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("config: cannot open '" + path + "'");
  return load_run_config(in);
}

}  // namespace sidelink
