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

#ifndef SIDELINK_REPORTS_HPP
#define SIDELINK_REPORTS_HPP

#include <string>

#include "sidelink/run_config.hpp"

namespace sidelink {

// 6 significant digits, C locale, no trailing zeros. All CSV numbers go
// through this so reruns are byte-identical.
std::string format_number(double value);

// fig4.csv: `algorithm,highest,worst,mean,std,unit`, one row per
// algorithm per unit system (mbit_per_s and bit_per_s_per_hz).
std::string simulate_to_csv(const RunConfig& config);

// fig5.csv: `num_vehicles,algorithm,mean_worst_rate` in Mbit/s over
// config.vehicle_counts.
std::string sweep_to_csv(const RunConfig& config);

// fig6.csv: `rate_bits_s_hz,algorithm,cdf` on the default grid; the
// unconstrained bound series is always included.
std::string cdf_to_csv(const RunConfig& config);

}  // namespace sidelink

#endif  // SIDELINK_REPORTS_HPP
