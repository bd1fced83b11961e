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

#ifndef SIDELINK_SCENARIO_HPP
#define SIDELINK_SCENARIO_HPP

#include <cstdint>
#include <span>
#include <string>

#include "sidelink/instance.hpp"
#include "sidelink/rng.hpp"

namespace sidelink {

enum class SinrModel {
  kIidLognormal,         // per-(vehicle, resource) i.i.d. lognormal SINR
  kDistanceInterference  // pathloss + shadowing, worst intended receiver
};

std::string to_string(SinrModel model);
SinrModel sinr_model_from_string(const std::string& name);

// Channel and grid parameters for instance generation.
//
// Defaults model one cluster on a 10 MHz carrier: 100 x 1 ms subframes
// per allocation period (10 Hz messaging), 7 subchannels of 1.26 MHz per
// subframe, of which the 5 data resource blocks (5 x 180 kHz) carry
// payload. SINR statistics are chosen so spectral efficiencies span
// roughly 1..10 bits/s/Hz.
struct ScenarioConfig {
  std::size_t num_vehicles = 100;
  std::size_t num_subframes = 100;
  std::size_t slots_per_subframe = 7;
  double data_bandwidth_hz = 900'000.0;
  SinrModel sinr_model = SinrModel::kIidLognormal;
  double sinr_mean_db = 17.0;
  double sinr_std_db = 6.0;
  double sinr_clip_db_min = 0.0;
  double sinr_clip_db_max = 30.0;
  double highway_length_m = 2000.0;   // distance model only
  double pathloss_exponent = 2.75;    // distance model only
  std::uint64_t seed = 1;

  // Throws std::invalid_argument on violated invariants.
  void validate() const;
};

struct SinrSample {
  double linear_sinr = 0.0;  // dimensionless, >= 0, finite
};

// Shannon-style rate weight: bandwidth * log2(1 + sinr), bits/s.
double rate_from_sinr(double sinr_linear, double bandwidth_hz);

// SINR_dB ~ Normal(sinr_mean_db, sinr_std_db), clipped to
// [sinr_clip_db_min, sinr_clip_db_max], returned in linear scale.
SinrSample sample_sinr_iid(const ScenarioConfig& config, RngStream& rng);

// Geometric model: received power follows d^-gamma with lognormal
// shadowing (sigma = sinr_std_db); the SINR is evaluated at the farthest
// intended receiver, with co-channel interferers adding to the noise
// floor. The noise level is normalized so that an unshadowed link across
// the full highway length sits at sinr_mean_db. Distances clamp at 1 m.
// Throws std::invalid_argument when rx_positions is empty.
SinrSample sample_sinr_distance(const ScenarioConfig& config,
                                double tx_position_m,
                                std::span<const double> rx_positions,
                                std::span<const double> interferer_positions,
                                RngStream& rng);

// Build the N x (S*K) weight matrix for one Monte Carlo trial. Pure
// function of (config, trial_index): entry (i, j) is
// rate_from_sinr(sampled SINR for vehicle i on resource j, bandwidth).
//
// Under the distance model, vehicle positions are drawn uniformly on
// [0, highway_length_m]; each transmitter is received by all other
// vehicles (or, for a single vehicle, by the far edge of the highway),
// and one co-channel interferer sits one highway length beyond each end,
// standing in for the nearest resource-reusing clusters.
ProblemInstance generate_instance(const ScenarioConfig& config,
                                  std::uint64_t trial_index);

}  // namespace sidelink

#endif  // SIDELINK_SCENARIO_HPP
