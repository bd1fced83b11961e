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

#include "sidelink/instance.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sidelink/errors.hpp"

namespace sidelink {

ProblemInstance::ProblemInstance(std::size_t num_vehicles,
                                 std::size_t num_subframes,
                                 std::size_t slots_per_subframe,
                                 Matrix weights)
    : num_vehicles_(num_vehicles),
      num_subframes_(num_subframes),
      slots_per_subframe_(slots_per_subframe),
      weights_(std::move(weights)) {
  if (num_vehicles_ < 1 || num_subframes_ < 1 || slots_per_subframe_ < 1)
    throw std::invalid_argument("ProblemInstance: all counts must be >= 1");
  if (weights_.rows() != num_vehicles_ ||
      weights_.cols() != num_subframes_ * slots_per_subframe_)
    throw std::invalid_argument(
        "ProblemInstance: weight matrix must be N x (S*K)");
  for (double w : weights_.flat())
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument(
          "ProblemInstance: weights must be finite and >= 0");
}

FeasibilityReport check_feasible(const ProblemInstance& instance,
                                 const Assignment& assignment) {
  FeasibilityReport report;
  const std::size_t n = instance.num_vehicles();
  const std::size_t num_resources = instance.num_resources();

  if (assignment.size() != n) {
    report.violations.push_back(
        "wrong length: expected " + std::to_string(n) + " entries, got " +
        std::to_string(assignment.size()));
    return report;  // index-based checks below would be meaningless
  }

  std::vector<std::size_t> resource_count(num_resources, 0);
  std::vector<std::size_t> subframe_count(instance.num_subframes(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = assignment[i];
    if (r >= num_resources) {
      report.violations.push_back("out-of-range index: vehicle " +
                                  std::to_string(i) + " -> resource " +
                                  std::to_string(r));
      continue;
    }
    ++resource_count[r];
    ++subframe_count[instance.subframe_of(r)];
  }
  for (std::size_t r = 0; r < num_resources; ++r)
    if (resource_count[r] > 1)
      report.violations.push_back("duplicate resource: resource " +
                                  std::to_string(r) + " assigned " +
                                  std::to_string(resource_count[r]) +
                                  " times");
  for (std::size_t a = 0; a < instance.num_subframes(); ++a)
    if (subframe_count[a] > 1)
      report.violations.push_back("subframe conflict: subframe " +
                                  std::to_string(a) + " used by " +
                                  std::to_string(subframe_count[a]) +
                                  " vehicles");
  return report;
}

double objective(const ProblemInstance& instance,
                 const Assignment& assignment) {
  FeasibilityReport report = check_feasible(instance, assignment);
  if (!report.ok())
    throw infeasible_error("objective: infeasible assignment (" +
                           report.violations.front() + ")");
  double total = 0.0;
  for (std::size_t i = 0; i < instance.num_vehicles(); ++i)
    total += instance.weight(i, assignment[i]);
  return total;
}

ProblemInstance load_instance(std::istream& in) {
  long long n_in = 0, s_in = 0, k_in = 0;
  if (!(in >> n_in >> s_in >> k_in))
    throw parse_error("instance: missing or malformed 'N S K' header");
  constexpr long long kDimCap = 1'000'000;
  if (n_in < 1 || s_in < 1 || k_in < 1 || n_in > kDimCap || s_in > kDimCap ||
      k_in > kDimCap)
    throw parse_error("instance: header counts must be in [1, 1e6]");
  const auto n = static_cast<std::size_t>(n_in);
  const auto s = static_cast<std::size_t>(s_in);
  const auto k = static_cast<std::size_t>(k_in);
  if (static_cast<unsigned long long>(n_in) * s_in * k_in > 100'000'000ULL)
    throw parse_error("instance: matrix exceeds 1e8 cells");

  Matrix weights(n, s * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < s * k; ++j)
      if (!(in >> weights(i, j)))
        throw parse_error("instance: expected " + std::to_string(n * s * k) +
                          " weights, matrix row " + std::to_string(i) +
                          " is short");

  double trailing;
  if (in >> trailing) throw parse_error("instance: trailing data after matrix");

  try {
    return ProblemInstance(n, s, k, std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("instance: ") + e.what());
  }
}

ProblemInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("instance: cannot open '" + path + "'");
  return load_instance(in);
}

void save_instance(const ProblemInstance& instance, std::ostream& out) {
  out << instance.num_vehicles() << ' ' << instance.num_subframes() << ' '
      << instance.slots_per_subframe() << '\n';
  char buf[32];
  for (std::size_t i = 0; i < instance.num_vehicles(); ++i) {
    for (std::size_t j = 0; j < instance.num_resources(); ++j) {
      // %.17g keeps the double bit pattern across a round-trip
      std::snprintf(buf, sizeof(buf), "%.17g", instance.weight(i, j));
      out << (j ? " " : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace sidelink
