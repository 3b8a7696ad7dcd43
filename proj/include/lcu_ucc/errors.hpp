// Copyright 2026 The lcu-ucc Authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace lcu_ucc {

// Operand sizes disagree (qubit counts, circuit widths, state dimensions).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense realization would exceed the configured qubit cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A closed-form angle left its real domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No weight-<=2 Z-mask decomposition reaches some expansion string.
class PlanningError : public std::runtime_error {
 public:
  PlanningError(const std::string& what, std::string offending)
      : std::runtime_error(what + ": " + offending),
        offending_(std::move(offending)) {}

  const std::string& offending_string() const noexcept { return offending_; }

 private:
  std::string offending_;
};

// Postselection onto the all-zero ancilla had (numerically) zero weight.
class ProjectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcu_ucc
