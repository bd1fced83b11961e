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

#include "sidelink/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sidelink {

std::string to_string(SinrModel model) {
  switch (model) {
    case SinrModel::kIidLognormal:
      return "iid-lognormal";
    case SinrModel::kDistanceInterference:
      return "distance-interference";
  }
  return "unknown";
}

SinrModel sinr_model_from_string(const std::string& name) {
  if (name == "iid-lognormal") return SinrModel::kIidLognormal;
  if (name == "distance-interference")
    return SinrModel::kDistanceInterference;
  throw std::invalid_argument("unknown sinr_model '" + name + "'");
}

void ScenarioConfig::validate() const {
  if (num_vehicles < 1 || num_subframes < 1 || slots_per_subframe < 1)
    throw std::invalid_argument("scenario: all counts must be >= 1");
  if (num_vehicles > num_subframes)
    throw std::invalid_argument(
        "scenario: num_vehicles must not exceed num_subframes");
  if (!(data_bandwidth_hz > 0.0) || !std::isfinite(data_bandwidth_hz))
    throw std::invalid_argument("scenario: bandwidth must be positive");
  if (!(sinr_clip_db_min <= sinr_clip_db_max))
    throw std::invalid_argument("scenario: empty SINR clip range");
  if (!(sinr_std_db >= 0.0) || !std::isfinite(sinr_std_db))
    throw std::invalid_argument("scenario: sinr_std_db must be >= 0");
  if (!std::isfinite(sinr_mean_db))
    throw std::invalid_argument("scenario: sinr_mean_db must be finite");
  if (!(highway_length_m > 0.0))
    throw std::invalid_argument("scenario: highway length must be positive");
  if (!(pathloss_exponent > 0.0))
    throw std::invalid_argument(
        "scenario: pathloss exponent must be positive");
}

double rate_from_sinr(double sinr_linear, double bandwidth_hz) {
  if (!std::isfinite(sinr_linear) || sinr_linear < 0.0)
    throw std::invalid_argument("rate_from_sinr: sinr must be finite, >= 0");
  if (!std::isfinite(bandwidth_hz) || bandwidth_hz <= 0.0)
    throw std::invalid_argument("rate_from_sinr: bandwidth must be positive");
  return bandwidth_hz * std::log2(1.0 + sinr_linear);
}

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double clip_to_linear(const ScenarioConfig& config, double sinr_db) {
  return db_to_linear(
      std::clamp(sinr_db, config.sinr_clip_db_min, config.sinr_clip_db_max));
}

}  // namespace

SinrSample sample_sinr_iid(const ScenarioConfig& config, RngStream& rng) {
  const double db = rng.next_normal(config.sinr_mean_db, config.sinr_std_db);
  return SinrSample{clip_to_linear(config, db)};
}

SinrSample sample_sinr_distance(const ScenarioConfig& config,
                                double tx_position_m,
                                std::span<const double> rx_positions,
                                std::span<const double> interferer_positions,
                                RngStream& rng) {
  if (rx_positions.empty())
    throw std::invalid_argument("sample_sinr_distance: empty receiver set");

  const double gamma = config.pathloss_exponent;
  const double ref = config.highway_length_m;  // distance of the 0-shadow
                                               // sinr_mean_db link
  const double mean_lin = db_to_linear(config.sinr_mean_db);

  // Broadcast quality is limited by the farthest intended receiver.
  double worst_rx = rx_positions[0];
  double max_dist = std::abs(tx_position_m - rx_positions[0]);
  for (double rx : rx_positions) {
    const double dist = std::abs(tx_position_m - rx);
    if (dist > max_dist) {
      max_dist = dist;
      worst_rx = rx;
    }
  }

  auto shadow = [&]() {
    return db_to_linear(rng.next_normal(0.0, config.sinr_std_db));
  };
  // 1 m clamp keeps the near-field singularity out of the power law.
  auto path_gain = [&](double dist) {
    return std::pow(ref / std::max(dist, 1.0), gamma);
  };

  const double signal = mean_lin * path_gain(max_dist) * shadow();
  double noise_plus_interference = 1.0;
  for (double pos : interferer_positions)
    noise_plus_interference +=
        mean_lin * path_gain(std::abs(pos - worst_rx)) * shadow();

  const double sinr_db =
      10.0 * std::log10(signal / noise_plus_interference);
  return SinrSample{clip_to_linear(config, sinr_db)};
}

ProblemInstance generate_instance(const ScenarioConfig& config,
                                  std::uint64_t trial_index) {
  config.validate();
  const std::size_t n = config.num_vehicles;
  const std::size_t num_resources =
      config.num_subframes * config.slots_per_subframe;
  RngStream rng = trial_stream(config.seed, trial_index, kInstanceStream);

  Matrix weights(n, num_resources);
  if (config.sinr_model == SinrModel::kIidLognormal) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < num_resources; ++j)
        weights(i, j) = rate_from_sinr(sample_sinr_iid(config, rng).linear_sinr,
                                       config.data_bandwidth_hz);
  } else {
    const double length = config.highway_length_m;
    std::vector<double> positions(n);
    for (double& p : positions) p = rng.next_double() * length;

    // Nearest co-channel clusters, one highway length beyond each end.
    const double interferers[2] = {-length, 2.0 * length};

    std::vector<double> receivers;
    receivers.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      receivers.clear();
      for (std::size_t r = 0; r < n; ++r)
        if (r != i) receivers.push_back(positions[r]);
      if (receivers.empty()) {
        // Lone vehicle: cover to the far edge of the highway.
        receivers.push_back(positions[i] < length / 2.0 ? length : 0.0);
      }
      for (std::size_t j = 0; j < num_resources; ++j) {
        const SinrSample sample = sample_sinr_distance(
            config, positions[i], receivers, interferers, rng);
        weights(i, j) =
            rate_from_sinr(sample.linear_sinr, config.data_bandwidth_hz);
      }
    }
  }
  return ProblemInstance(n, config.num_subframes, config.slots_per_subframe,
                         std::move(weights));
}

}  // namespace sidelink
