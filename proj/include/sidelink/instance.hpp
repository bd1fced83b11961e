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

#ifndef SIDELINK_INSTANCE_HPP
#define SIDELINK_INSTANCE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sidelink/grid.hpp"

namespace sidelink {

// One allocation problem: N vehicles, a resource grid of S subframes with
// K slots each, and a non-negative rate weight (bits/s) per
// (vehicle, resource) pair. Resource j lives in subframe j / K, slot
// j % K; allocations that share a subframe conflict in time.
class ProblemInstance {
 public:
  // Throws std::invalid_argument unless the weight matrix is
  // N x (S*K) with finite non-negative entries and all counts are >= 1.
  ProblemInstance(std::size_t num_vehicles, std::size_t num_subframes,
                  std::size_t slots_per_subframe, Matrix weights);

  std::size_t num_vehicles() const { return num_vehicles_; }
  std::size_t num_subframes() const { return num_subframes_; }
  std::size_t slots_per_subframe() const { return slots_per_subframe_; }
  std::size_t num_resources() const {
    return num_subframes_ * slots_per_subframe_;
  }

  const Matrix& weights() const { return weights_; }
  double weight(std::size_t vehicle, std::size_t resource) const {
    return weights_(vehicle, resource);
  }

  std::size_t subframe_of(std::size_t resource) const {
    return resource / slots_per_subframe_;
  }
  std::size_t slot_of(std::size_t resource) const {
    return resource % slots_per_subframe_;
  }
  std::size_t resource_at(std::size_t subframe, std::size_t slot) const {
    return subframe * slots_per_subframe_ + slot;
  }

 private:
  std::size_t num_vehicles_;
  std::size_t num_subframes_;
  std::size_t slots_per_subframe_;
  Matrix weights_;
};

// Vehicle -> resource mapping; entry i is the resource index assigned to
// vehicle i. Feasible when all entries are in range, distinct, and no two
// share a subframe (see check_feasible).
struct Assignment {
  std::vector<std::size_t> mapping;

  std::size_t size() const { return mapping.size(); }
  std::size_t operator[](std::size_t vehicle) const {
    return mapping[vehicle];
  }
  bool operator==(const Assignment&) const = default;
};

// Vehicle -> subframe mapping over the aggregated (macro-vertex) graph.
struct MacroAssignment {
  std::vector<std::size_t> mapping;

  std::size_t size() const { return mapping.size(); }
  std::size_t operator[](std::size_t vehicle) const {
    return mapping[vehicle];
  }
  bool operator==(const MacroAssignment&) const = default;
};

// Per-subframe maxima: d(i, a) is the best weight vehicle i can get in
// subframe a, argmax_slot(i, a) the slot achieving it (lowest on ties).
// Carries K so a macro matching can be expanded without the instance.
struct AggregatedWeights {
  Matrix d;                       // N x S
  Grid<std::size_t> argmax_slot;  // N x S, entries in [0, K)
  std::size_t slots_per_subframe = 1;
};

// Sharpness parameter for the smooth (log-sum-exp) aggregation.
struct SmoothMaxConfig {
  double beta = 1.0;
};

struct FeasibilityReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Structural feasibility check: reports wrong mapping length, out-of-range
// resource indices, duplicate resources, and subframe conflicts.
// Violations are data, not errors.
FeasibilityReport check_feasible(const ProblemInstance& instance,
                                 const Assignment& assignment);

// Total achieved rate sum_i weights[i][assignment[i]] (bits/s).
// Throws infeasible_error when the assignment is not feasible.
double objective(const ProblemInstance& instance,
                 const Assignment& assignment);

// Plain-text matrix format: a header line "N S K" followed by N rows of
// S*K whitespace-separated weights. Round-trips exactly.
ProblemInstance load_instance(std::istream& in);
ProblemInstance load_instance_file(const std::string& path);
void save_instance(const ProblemInstance& instance, std::ostream& out);

}  // namespace sidelink

#endif  // SIDELINK_INSTANCE_HPP
