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

#ifndef SIDELINK_BASELINES_HPP
#define SIDELINK_BASELINES_HPP

#include <vector>

#include "sidelink/instance.hpp"
#include "sidelink/matching.hpp"
#include "sidelink/rng.hpp"

namespace sidelink {

// First-come-first-served: vehicles claim resources in `order`, each
// taking its best resource among subframes nobody has claimed yet (ties
// to the lowest resource index); the chosen subframe is then blocked.
// `order` must be a permutation of [0, N).
SolveResult solve_greedy(const ProblemInstance& instance,
                         const std::vector<std::size_t>& order);

// Natural-order convenience overload.
SolveResult solve_greedy(const ProblemInstance& instance);

// Uniform draw over the feasible assignments: a uniform random injection
// of vehicles into subframes, then an independent uniform slot each.
SolveResult solve_random(const ProblemInstance& instance, RngStream& rng);

}  // namespace sidelink

#endif  // SIDELINK_BASELINES_HPP
