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

#include "sidelink/selftest.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "sidelink/baselines.hpp"
#include "sidelink/instance.hpp"
#include "sidelink/matching.hpp"
#include "sidelink/rng.hpp"

namespace sidelink {

namespace {

constexpr double kTolerance = 1e-9;

ProblemInstance random_small_instance(RngStream& rng) {
  const std::size_t n = 1 + rng.next_below(6);
  const std::size_t s = n + rng.next_below(7 - n);  // N <= S <= 6
  const std::size_t k = 1 + rng.next_below(3);
  Matrix weights(n, s * k);
  for (double& w : weights.flat()) w = rng.next_double() * 10.0;
  return ProblemInstance(n, s, k, std::move(weights));
}

void dump_counterexample(std::ostream& out, const ProblemInstance& instance,
                         const std::string& detail) {
  out << "counterexample (" << detail << "):\n";
  save_instance(instance, out);
}

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
  RngStream rng(options.seed);
  const std::size_t total = options.num_instances;

  std::size_t oracle_ok = 0, bound_ok = 0, dominance_ok = 0, feasible_ok = 0;
  bool dumped = false;

  for (std::size_t trial = 0; trial < total; ++trial) {
    const ProblemInstance instance = random_small_instance(rng);

    // The fault flag negates one aggregated weight before the matching
    // step, a simulated defect in the reduction. The oracle then
    // disagrees and the counterexample dump gets exercised end to end.
    SolveResult graph;
    if (options.inject_fault) {
      AggregatedWeights agg = aggregate_max(instance);
      agg.d(0, 0) = -agg.d(0, 0);
      const AssignmentSolution macro = solve_assignment(agg.d);
      graph.assignment = expand(MacroAssignment{macro.row_to_col}, agg);
      graph.value = objective(instance, graph.assignment);
    } else {
      graph = solve_constrained(instance);
    }
    const OracleResult oracle = brute_force_constrained(instance);
    const SolveResult unconstrained = solve_unconstrained(instance);
    const SolveResult greedy = solve_greedy(instance);
    RngStream random_rng(options.seed, 1'000'000 + trial);
    const SolveResult random = solve_random(instance, random_rng);

    const bool oracle_match =
        std::abs(graph.value - oracle.value) <= kTolerance;
    oracle_ok += oracle_match;
    if (!oracle_match && !dumped) {
      dumped = true;
      dump_counterexample(out, instance,
                          "graph value " + std::to_string(graph.value) +
                              " != oracle value " +
                              std::to_string(oracle.value));
    }

    bool bound_holds = true;
    const AggregatedWeights agg = aggregate_max(instance);
    for (double beta : {1.0, 10.0, 100.0, 1e4}) {
      const Matrix smooth = smooth_aggregate(instance, SmoothMaxConfig{beta});
      const double bound =
          std::log(static_cast<double>(instance.slots_per_subframe())) / beta;
      for (std::size_t i = 0; i < smooth.rows() && bound_holds; ++i)
        for (std::size_t a = 0; a < smooth.cols(); ++a) {
          const double gap = smooth(i, a) - agg.d(i, a);
          if (gap < 0.0 || gap > bound) {
            bound_holds = false;
            break;
          }
        }
    }
    bound_ok += bound_holds;
    if (!bound_holds && !dumped) {
      dumped = true;
      dump_counterexample(out, instance, "smooth-max gap outside [0, ln(K)/beta]");
    }

    const bool dominance = unconstrained.value >= graph.value - kTolerance &&
                           graph.value >= greedy.value - kTolerance &&
                           graph.value >= random.value - kTolerance;
    dominance_ok += dominance;
    if (!dominance && !dumped) {
      dumped = true;
      dump_counterexample(out, instance, "dominance chain violated");
    }

    const bool all_feasible = check_feasible(instance, graph.assignment).ok() &&
                              check_feasible(instance, greedy.assignment).ok() &&
                              check_feasible(instance, random.assignment).ok();
    feasible_ok += all_feasible;
    if (!all_feasible && !dumped) {
      dumped = true;
      dump_counterexample(out, instance, "infeasible solver output");
    }
  }

  out << "oracle equivalence: " << oracle_ok << "/" << total << "\n";
  out << "smooth-max bound: " << bound_ok << "/" << total << "\n";
  out << "dominance chain: " << dominance_ok << "/" << total << "\n";
  out << "feasibility: " << feasible_ok << "/" << total << "\n";

  const bool all_passed = oracle_ok == total && bound_ok == total &&
                          dominance_ok == total && feasible_ok == total;
  out << (all_passed ? "selftest: PASS" : "selftest: FAIL") << "\n";
  return all_passed ? 0 : 1;
}

}  // namespace sidelink
