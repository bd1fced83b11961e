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

#include "sidelink/matching.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidelink/errors.hpp"

namespace sidelink {

AggregatedWeights aggregate_max(const ProblemInstance& instance) {
  const std::size_t n = instance.num_vehicles();
  const std::size_t s = instance.num_subframes();
  const std::size_t k = instance.slots_per_subframe();

  AggregatedWeights agg{Matrix(n, s), Grid<std::size_t>(n, s), k};
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = instance.weights().row(i);
    for (std::size_t a = 0; a < s; ++a) {
      double best = row[a * k];
      std::size_t best_slot = 0;
      for (std::size_t slot = 1; slot < k; ++slot) {
        if (row[a * k + slot] > best) {  // strict: ties keep the lowest slot
          best = row[a * k + slot];
          best_slot = slot;
        }
      }
      agg.d(i, a) = best;
      agg.argmax_slot(i, a) = best_slot;
    }
  }
  return agg;
}

Matrix smooth_aggregate(const ProblemInstance& instance,
                        const SmoothMaxConfig& config) {
  if (!std::isfinite(config.beta) || config.beta <= 0.0)
    throw std::invalid_argument(
        "smooth_aggregate: beta must be positive and finite");
  const double beta = config.beta;
  const std::size_t n = instance.num_vehicles();
  const std::size_t s = instance.num_subframes();
  const std::size_t k = instance.slots_per_subframe();

  Matrix out(n, s);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = instance.weights().row(i);
    for (std::size_t a = 0; a < s; ++a) {
      double block_max = row[a * k];
      for (std::size_t slot = 1; slot < k; ++slot)
        block_max = std::max(block_max, row[a * k + slot]);
      // Exponent differences are <= 0 after subtracting the block max,
      // so the exponentials cannot overflow for any beta.
      double sum = 0.0;
      for (std::size_t slot = 0; slot < k; ++slot)
        sum += std::exp(beta * (row[a * k + slot] - block_max));
      out(i, a) = block_max + std::log(sum) / beta;
    }
  }
  return out;
}

Assignment expand(const MacroAssignment& macro, const AggregatedWeights& agg) {
  const std::size_t n = agg.d.rows();
  const std::size_t s = agg.d.cols();
  const std::size_t k = agg.slots_per_subframe;
  if (macro.size() != n)
    throw std::invalid_argument("expand: macro assignment has length " +
                                std::to_string(macro.size()) + ", expected " +
                                std::to_string(n));

  Assignment result;
  result.mapping.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = macro[i];
    if (a >= s)
      throw std::invalid_argument("expand: subframe index " +
                                  std::to_string(a) + " out of range");
    result.mapping[i] = a * k + agg.argmax_slot(i, a);
  }
  return result;
}

SolveResult solve_constrained(const ProblemInstance& instance) {
  if (instance.num_vehicles() > instance.num_subframes())
    throw infeasible_error("infeasible: more vehicles than subframes (" +
                           std::to_string(instance.num_vehicles()) + " > " +
                           std::to_string(instance.num_subframes()) + ")");

  const AggregatedWeights agg = aggregate_max(instance);
  const AssignmentSolution macro_solution = solve_assignment(agg.d);

  MacroAssignment macro{macro_solution.row_to_col};
  SolveResult result;
  result.assignment = expand(macro, agg);
  // Each expanded weight is bit-identical to the selected d entry, so the
  // objective equals the aggregated matching value exactly.
  result.value = 0.0;
  for (std::size_t i = 0; i < instance.num_vehicles(); ++i)
    result.value += instance.weight(i, result.assignment[i]);
  return result;
}

SolveResult solve_unconstrained(const ProblemInstance& instance) {
  if (instance.num_vehicles() > instance.num_resources())
    throw infeasible_error("infeasible: more vehicles than resources (" +
                           std::to_string(instance.num_vehicles()) + " > " +
                           std::to_string(instance.num_resources()) + ")");
  const AssignmentSolution solution = solve_assignment(instance.weights());
  return SolveResult{Assignment{solution.row_to_col}, solution.value};
}

std::uint64_t feasible_count(std::size_t num_vehicles,
                             std::size_t num_subframes,
                             std::size_t slots_per_subframe) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t n = num_vehicles;
  const std::uint64_t s = num_subframes;
  const std::uint64_t k = slots_per_subframe;
  if (n > s) return 0;

  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t factor = s - i;
    if (count > kMax / factor) return kMax;
    count *= factor;
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    if (count > kMax / k) return kMax;
    count *= k;
  }
  return count;
}

std::uint64_t feasible_count(const ProblemInstance& instance) {
  return feasible_count(instance.num_vehicles(), instance.num_subframes(),
                        instance.slots_per_subframe());
}

namespace {

struct OracleState {
  const ProblemInstance* instance;
  std::vector<char> subframe_used;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  double best_value = -std::numeric_limits<double>::infinity();
  std::uint64_t enumerated = 0;
};

// Depth-first over vehicles, resources tried in increasing index order,
// so complete mappings appear in lexicographic order. Keeping the first
// strict maximizer yields the lexicographically smallest optimum.
void enumerate(OracleState& state, std::size_t vehicle, double value) {
  const ProblemInstance& inst = *state.instance;
  if (vehicle == inst.num_vehicles()) {
    ++state.enumerated;
    if (value > state.best_value) {
      state.best_value = value;
      state.best = state.current;
    }
    return;
  }
  for (std::size_t r = 0; r < inst.num_resources(); ++r) {
    const std::size_t a = inst.subframe_of(r);
    if (state.subframe_used[a]) continue;
    state.subframe_used[a] = 1;
    state.current[vehicle] = r;
    enumerate(state, vehicle + 1, value + inst.weight(vehicle, r));
    state.subframe_used[a] = 0;
  }
}

}  // namespace

OracleResult brute_force_constrained(const ProblemInstance& instance,
                                     std::uint64_t cap) {
  if (instance.num_vehicles() > instance.num_subframes())
    throw infeasible_error("infeasible: more vehicles than subframes");
  const std::uint64_t count = feasible_count(instance);
  if (count > cap)
    throw oracle_cap_error(
        "instance too large for oracle: " + std::to_string(count) +
        " feasible assignments exceed cap " + std::to_string(cap));

  OracleState state;
  state.instance = &instance;
  state.subframe_used.assign(instance.num_subframes(), 0);
  state.current.assign(instance.num_vehicles(), 0);
  enumerate(state, 0, 0.0);

  return OracleResult{Assignment{state.best}, state.best_value,
                      state.enumerated};
}

}  // namespace sidelink
