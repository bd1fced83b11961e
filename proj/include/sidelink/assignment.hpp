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

#ifndef SIDELINK_ASSIGNMENT_HPP
#define SIDELINK_ASSIGNMENT_HPP

#include <cstddef>
#include <vector>

#include "sidelink/grid.hpp"

namespace sidelink {

struct AssignmentSolution {
  std::vector<std::size_t> row_to_col;  // length = rows, injective
  double value = 0.0;                   // sum of selected weights
};

// Maximum-weight assignment of every row to a distinct column
// (Kuhn-Munkres with row potentials and Dijkstra-style augmentation,
// O(R^2 * C)). Requires R <= C; entries may be any finite double.
//
// Throws std::invalid_argument on non-finite entries and
// infeasible_error when R > C.
AssignmentSolution solve_assignment(const Matrix& weights);

}  // namespace sidelink

#endif  // SIDELINK_ASSIGNMENT_HPP
