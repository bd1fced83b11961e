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

#include "sidelink/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sidelink/errors.hpp"

namespace sidelink {

SolveResult solve_greedy(const ProblemInstance& instance,
                         const std::vector<std::size_t>& order) {
  const std::size_t n = instance.num_vehicles();
  if (n > instance.num_subframes())
    throw infeasible_error("infeasible: more vehicles than subframes");
  {
    std::vector<char> seen(n, 0);
    if (order.size() != n)
      throw std::invalid_argument("solve_greedy: order has wrong length");
    for (std::size_t v : order) {
      if (v >= n || seen[v])
        throw std::invalid_argument(
            "solve_greedy: order is not a permutation of the vehicles");
      seen[v] = 1;
    }
  }

  std::vector<char> subframe_blocked(instance.num_subframes(), 0);
  SolveResult result;
  result.assignment.mapping.resize(n);
  for (std::size_t v : order) {
    double best = -1.0;
    std::size_t best_resource = 0;
    for (std::size_t r = 0; r < instance.num_resources(); ++r) {
      if (subframe_blocked[instance.subframe_of(r)]) continue;
      if (instance.weight(v, r) > best) {  // strict: ties keep lowest index
        best = instance.weight(v, r);
        best_resource = r;
      }
    }
    result.assignment.mapping[v] = best_resource;
    subframe_blocked[instance.subframe_of(best_resource)] = 1;
    result.value += best;
  }
  return result;
}

SolveResult solve_greedy(const ProblemInstance& instance) {
  std::vector<std::size_t> order(instance.num_vehicles());
  std::iota(order.begin(), order.end(), 0);
  return solve_greedy(instance, order);
}

SolveResult solve_random(const ProblemInstance& instance, RngStream& rng) {
  const std::size_t n = instance.num_vehicles();
  const std::size_t s = instance.num_subframes();
  const std::size_t k = instance.slots_per_subframe();
  if (n > s) throw infeasible_error("infeasible: more vehicles than subframes");

  // Partial Fisher-Yates: the first N entries of the shuffled subframe
  // list form a uniform injection of vehicles into subframes.
  std::vector<std::size_t> subframes(s);
  std::iota(subframes.begin(), subframes.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + rng.next_below(s - i);
    std::swap(subframes[i], subframes[j]);
  }

  SolveResult result;
  result.assignment.mapping.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t slot = rng.next_below(k);
    const std::size_t r = instance.resource_at(subframes[v], slot);
    result.assignment.mapping[v] = r;
    result.value += instance.weight(v, r);
  }
  return result;
}

}  // namespace sidelink
