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

#ifndef SIDELINK_MATCHING_HPP
#define SIDELINK_MATCHING_HPP

#include <cstdint>

#include "sidelink/assignment.hpp"
#include "sidelink/instance.hpp"

namespace sidelink {

struct SolveResult {
  Assignment assignment;
  double value = 0.0;  // bits/s
};

struct OracleResult {
  Assignment assignment;
  double value = 0.0;
  std::uint64_t enumerated = 0;  // feasible assignments visited
};

// Collapse each subframe's K slots to their maximum: d(i, a) is the best
// weight vehicle i can achieve in subframe a. Ties go to the lowest slot.
AggregatedWeights aggregate_max(const ProblemInstance& instance);

// Smooth (log-sum-exp) aggregation: entry (i, a) is
// (1/beta) * ln(sum_k exp(beta * w[i][a*K+k])), evaluated stably by
// subtracting the per-block maximum. Converges to aggregate_max from
// above as beta -> infinity; the gap is bounded by ln(K)/beta.
Matrix smooth_aggregate(const ProblemInstance& instance,
                        const SmoothMaxConfig& config);

// Turn a vehicle->subframe matching into a vehicle->resource assignment
// by giving each vehicle the argmax slot of its subframe.
Assignment expand(const MacroAssignment& macro, const AggregatedWeights& agg);

// Optimal conflict-free allocation: aggregate_max, assign vehicles to
// subframes on the aggregated matrix, expand to concrete slots.
// Requires N <= S (throws infeasible_error otherwise).
SolveResult solve_constrained(const ProblemInstance& instance);

// Optimal allocation ignoring the subframe-orthogonality constraint
// (resources still used at most once). Upper-bounds solve_constrained.
// Requires N <= S*K.
SolveResult solve_unconstrained(const ProblemInstance& instance);

// Number of feasible assignments, S!/(S-N)! * K^N, saturating at
// uint64 max.
std::uint64_t feasible_count(std::size_t num_vehicles,
                             std::size_t num_subframes,
                             std::size_t slots_per_subframe);
std::uint64_t feasible_count(const ProblemInstance& instance);

// Exhaustive reference solver: enumerates every feasible assignment in
// lexicographic mapping order and keeps the first maximizer, so ties
// break to the lexicographically smallest mapping. Refuses instances
// whose feasible count exceeds `cap` (oracle_cap_error).
OracleResult brute_force_constrained(const ProblemInstance& instance,
                                     std::uint64_t cap = 10'000'000);

}  // namespace sidelink

#endif  // SIDELINK_MATCHING_HPP
