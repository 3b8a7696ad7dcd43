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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcu_ucc/circuit.hpp"
#include "lcu_ucc/fermion.hpp"

namespace lcu_ucc {

/// CNOT model: a k-controlled one-qubit operator costs 8k - 12 for k >= 2,
/// a singly-controlled Pauli or phase costs 1 or 2. rho lists the idle
/// qubits between consecutive active-orbital pairs (length 2n - 2).
struct CostReport {
  std::size_t rank = 0;
  std::vector<std::uint64_t> rho;
  std::uint64_t prepare_cnots = 0;
  std::uint64_t select_cnots = 0;
  std::uint64_t reference_init_cnots = 0;
  std::uint64_t total_cnots = 0;
  std::uint64_t cascade_cnots = 0;
};

/// 2n + 2 sum_{k=2}^{2n-1} (8k - 12)(2n + 1 - k); checked against the
/// closed form 2(32n^3 - 24n^2 - 41n + 36)/3.
std::uint64_t prepare_cnot_count(std::size_t n);
std::uint64_t prepare_cnot_closed_form(std::size_t n);

struct SelectCounts {
  std::uint64_t steps = 0;  // 4n - 2
  std::uint64_t init = 0;   // 4n + sum rho
};

SelectCounts select_cnot_counts(std::size_t n, const std::vector<std::uint64_t>& rho);

/// 6 prepare + 3 (steps + init); checked against
/// 128n^3 - 96n^2 - 140n + 138 + 3 sum rho.
std::uint64_t total_lcu_count(std::size_t n, const std::vector<std::uint64_t>& rho);
std::uint64_t total_lcu_closed_form(std::size_t n, const std::vector<std::uint64_t>& rho);

/// 2^{2n} (2n - 1 + sum rho): 2^{2n-1} staircases of 2(2n - 1 + sum rho).
std::uint64_t cascade_count(std::size_t n, const std::vector<std::uint64_t>& rho);

CostReport cost_report(std::size_t n, const std::vector<std::uint64_t>& rho);

/// Product of exp(theta c_P P) over the XY strings of A - A^dag, each as a
/// basis change, CNOT staircase, RZ, and the mirrored staircase.
Circuit synth_cascade(const UccFactor& f);

/// Uniform gap list of length 2n - 2.
std::vector<std::uint64_t> uniform_rho(std::size_t n, std::uint64_t fill);

/// CSV "rank,cascade,lcu_total,prepare,select_total", one row per rank.
std::string emit_comparison(std::size_t n_max, std::uint64_t rho_fill = 0);

}  // namespace lcu_ucc
