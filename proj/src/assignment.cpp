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

#include "sidelink/assignment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sidelink/errors.hpp"

namespace sidelink {

// Shortest-augmenting-path formulation of Kuhn-Munkres (the e-maxx /
// Jonker-Volgenant potential variant). Maximization is run as
// minimization of the negated weights; rows and columns are 1-indexed
// internally, with index 0 acting as the virtual start column. A full
// assignment of all R rows always exists for R <= C, so no explicit
// dummy-row padding is materialized.
AssignmentSolution solve_assignment(const Matrix& weights) {
  const std::size_t rows = weights.rows();
  const std::size_t cols = weights.cols();
  if (rows > cols)
    throw infeasible_error("solve_assignment: more rows than columns (" +
                           std::to_string(rows) + " > " +
                           std::to_string(cols) + ")");
  for (double w : weights.flat())
    if (!std::isfinite(w))
      throw std::invalid_argument("solve_assignment: non-finite weight");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t n = rows, m = cols;

  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> match(m + 1, 0);  // column -> row (1-indexed)
  std::vector<std::size_t> way(m + 1, 0);
  std::vector<double> minv(m + 1);
  std::vector<char> used(m + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    minv.assign(m + 1, kInf);
    used.assign(m + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      const double* row = weights.row(i0 - 1).data();
      const double u0 = u[i0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = -row[j - 1] - u0 - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    // Flip the augmenting path back to the start column.
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  AssignmentSolution solution;
  solution.row_to_col.assign(rows, 0);
  for (std::size_t j = 1; j <= m; ++j)
    if (match[j] != 0) solution.row_to_col[match[j] - 1] = j - 1;
  // Recompute the value from the input weights; -v[0] carries the
  // accumulated potential roundoff.
  for (std::size_t i = 0; i < rows; ++i)
    solution.value += weights(i, solution.row_to_col[i]);
  return solution;
}

}  // namespace sidelink
