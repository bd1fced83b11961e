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

#ifndef SIDELINK_SELFTEST_HPP
#define SIDELINK_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>

namespace sidelink {

struct SelftestOptions {
  std::size_t num_instances = 1000;
  std::uint64_t seed = 0x51de11;
  // Corrupts the solver's view of each instance (negates one weight) to
  // demonstrate that a genuine property violation is caught and dumped.
  bool inject_fault = false;
};

// Property sweep over random small instances: oracle equivalence of the
// reduced solve, the smooth-max gap bound, the dominance chain, and
// feasibility of every produced assignment. Prints one "name: passed/
// total" line per property plus a counterexample dump for the first
// failure. Returns 0 when everything holds, 1 otherwise.
int run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace sidelink

#endif  // SIDELINK_SELFTEST_HPP
