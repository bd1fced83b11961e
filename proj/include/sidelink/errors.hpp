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

#ifndef SIDELINK_ERRORS_HPP
#define SIDELINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sidelink {

// A problem that has no feasible solution (e.g. more vehicles than
// subframes). Maps to CLI exit code 3.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what)
      : std::runtime_error(what) {}
};

// The exhaustive oracle was asked to enumerate more candidates than its
// configured cap allows. Maps to CLI exit code 4.
class oracle_cap_error : public std::runtime_error {
 public:
  explicit oracle_cap_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed instance file or configuration. Maps to CLI exit code 2.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sidelink

#endif  // SIDELINK_ERRORS_HPP
