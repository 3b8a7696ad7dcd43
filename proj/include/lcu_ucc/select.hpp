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

#include <complex>
#include <cstddef>
#include <vector>

#include "json.hpp"
#include "lcu_ucc/circuit.hpp"
#include "lcu_ucc/fermion.hpp"
#include "lcu_ucc/pauli.hpp"

namespace lcu_ucc {

/// One SELECT step: Z on both mask qubits, controlled by one ancilla.
struct SelectStep {
  std::size_t ancilla_qubit;
  Polarity polarity = Polarity::positive;
  PauliString z_mask;  // system-wide, letters in {I, Z}, weight <= 2
};

/// What SELECT must do on one ancilla code.
///
/// `string` is mask-product times reference with its Pauli phase i^k tracked;
/// the circuit applies phase_correction * string, which equals
/// e^{i arg(coefficient)} times the phase-free letters.
struct CodeEntry {
  std::size_t code = 0;
  PauliString string;
  std::complex<double> coefficient;
  std::complex<double> phase_correction{1.0, 0.0};

  std::complex<double> applied_phase() const { return phase_correction * string.phase(); }
};

struct SelectPlan {
  std::size_t rank = 0;
  std::size_t num_system = 0;
  std::size_t sector_qubit = 0;
  PauliString xy_reference;
  PauliString iz_reference;
  std::vector<SelectStep> steps;
  std::vector<CodeEntry> code_table;  // indexed by code

  std::size_t num_ancilla() const { return 2 * rank; }
};

/// Chooses references and 2n-1 weight-<=2 Z masks that generate both
/// sectors of the factor's expansion, fills the code table (phases
/// included) and checks the plan against the symbolic expansion. Throws
/// PlanningError with the offending string when no decomposition exists.
///
/// Ancilla codes read ancilla qubit 0 (the sector qubit) as the most
/// significant bit; XY strings live on codes with the sector bit set.
SelectPlan derive_select_plan(const UccFactor& f);

/// SELECT on 2n ancilla + N system qubits (ancilla first): controlled XY
/// reference with its Jordan-Wigner chain, anticontrolled IZ reference, two
/// controlled Z per step, then code-controlled phases.
Circuit synth_select(const UccFactor& f, const SelectPlan& plan);

struct SelectReport {
  double max_deviation = 0;
  std::size_t worst_code = 0;
  std::size_t codes_checked = 0;
  bool pass = false;
};

/// For every ancilla code, compares the induced system operator with the
/// code-table string (phase included).
SelectReport verify_select(const UccFactor& f, const SelectPlan& plan,
                           const Circuit& circuit, double tolerance);

nlohmann::json plan_to_json(const SelectPlan& plan);

}  // namespace lcu_ucc
