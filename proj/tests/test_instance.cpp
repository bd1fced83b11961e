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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "sidelink/errors.hpp"
#include "sidelink/rng.hpp"

using namespace sidelink;

namespace {

ProblemInstance example_instance() {
  return ProblemInstance(2, 2, 2, Matrix{{5, 1, 2, 9}, {3, 3, 4, 0}});
}

}  // namespace

TEST_CASE("instance validates its invariants") {
  CHECK_THROWS_AS(ProblemInstance(2, 2, 2, Matrix{{1, 2}, {3, 4}}),
                  std::invalid_argument);  // wrong column count
  CHECK_THROWS_AS(ProblemInstance(1, 1, 1, Matrix{{-1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ProblemInstance(1, 1, 1,
                      Matrix{{std::numeric_limits<double>::quiet_NaN()}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      ProblemInstance(1, 1, 1,
                      Matrix{{std::numeric_limits<double>::infinity()}}),
      std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance(0, 1, 1, Matrix(0, 1)),
                  std::invalid_argument);
}

TEST_CASE("resource index convention") {
  const ProblemInstance inst(1, 3, 4, Matrix(1, 12, 1.0));
  CHECK(inst.subframe_of(0) == 0);
  CHECK(inst.subframe_of(11) == 2);
  CHECK(inst.slot_of(5) == 1);
  for (std::size_t j = 0; j < inst.num_resources(); ++j)
    CHECK(inst.resource_at(inst.subframe_of(j), inst.slot_of(j)) == j);
}

TEST_CASE("check_feasible classifies each violation") {
  const ProblemInstance inst = example_instance();

  CHECK(check_feasible(inst, Assignment{{3, 0}}).ok());

  const auto conflict = check_feasible(inst, Assignment{{0, 1}});
  REQUIRE(conflict.violations.size() == 1);
  CHECK(conflict.violations[0].find("subframe conflict") != std::string::npos);

  const auto duplicate = check_feasible(inst, Assignment{{0, 0}});
  CHECK(duplicate.violations.size() == 2);  // duplicate + subframe conflict
  CHECK(duplicate.violations[0].find("duplicate resource") !=
        std::string::npos);

  const auto short_mapping = check_feasible(inst, Assignment{{0}});
  REQUIRE(short_mapping.violations.size() == 1);
  CHECK(short_mapping.violations[0].find("wrong length") != std::string::npos);

  const auto out_of_range = check_feasible(inst, Assignment{{4, 0}});
  CHECK(!out_of_range.ok());
  CHECK(out_of_range.violations[0].find("out-of-range") != std::string::npos);
}

TEST_CASE("objective sums the selected weights") {
  const ProblemInstance inst = example_instance();
  CHECK(objective(inst, Assignment{{3, 0}}) == doctest::Approx(12.0));

  const ProblemInstance zeros(2, 2, 1, Matrix(2, 2, 0.0));
  CHECK(objective(zeros, Assignment{{0, 1}}) == 0.0);

  const ProblemInstance single(1, 1, 1, Matrix{{7}});
  CHECK(objective(single, Assignment{{0}}) == 7.0);

  CHECK_THROWS_AS(objective(inst, Assignment{{0, 1}}), infeasible_error);
}

TEST_CASE("matrix format round-trips exactly") {
  RngStream rng(42);
  Matrix weights(3, 8);
  for (double& w : weights.flat()) w = rng.next_double() * 1e7;
  const ProblemInstance original(3, 4, 2, weights);

  std::stringstream buffer;
  save_instance(original, buffer);
  const ProblemInstance loaded = load_instance(buffer);

  CHECK(loaded.num_vehicles() == 3);
  CHECK(loaded.num_subframes() == 4);
  CHECK(loaded.slots_per_subframe() == 2);
  CHECK(loaded.weights() == original.weights());  // bit-exact
}

TEST_CASE("matrix format rejects malformed input") {
  auto load_text = [](const char* text) {
    std::istringstream in(text);
    return load_instance(in);
  };
  CHECK_THROWS_AS(load_text(""), parse_error);
  CHECK_THROWS_AS(load_text("2 2"), parse_error);
  CHECK_THROWS_AS(load_text("1 1 1\n"), parse_error);      // missing weights
  CHECK_THROWS_AS(load_text("1 1 2\n1.0\n"), parse_error);  // short row
  CHECK_THROWS_AS(load_text("1 1 1\n1.0 2.0\n"), parse_error);  // trailing
  CHECK_THROWS_AS(load_text("0 1 1\n"), parse_error);
  CHECK_THROWS_AS(load_text("-1 1 1\n"), parse_error);
  CHECK_THROWS_AS(load_text("99999999 99999999 99\n"), parse_error);
  CHECK_THROWS_AS(load_text("1 1 1\n-3.0\n"), parse_error);  // negative
  CHECK_THROWS_AS(load_text("1 1 1\nabc\n"), parse_error);
}
