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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcu_ucc/dense.hpp"
#include "lcu_ucc/errors.hpp"

namespace lcu_ucc {

enum class GateKind { H, X, Y, Z, RX, RY, RZ, PHASE, GLOBALPHASE };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);
bool takes_angle(GateKind kind);

enum class Polarity { positive, negative };

struct Control {
  std::size_t qubit;
  Polarity polarity = Polarity::positive;

  friend bool operator==(const Control&, const Control&) = default;
};

/// One (multi-)controlled single-qubit gate. Rotations follow
/// R_P(angle) = exp(-i angle P / 2); PHASE is diag(1, e^{i angle}).
/// GLOBALPHASE multiplies by e^{i angle} and may omit its target, in which
/// case it acts only through its controls.
struct Gate {
  GateKind kind;
  double angle = 0.0;
  std::vector<std::size_t> targets;
  std::vector<Control> controls;

  friend bool operator==(const Gate&, const Gate&) = default;

  /// The 2x2 matrix applied to the target on the all-controls-met branch.
  Eigen::Matrix2cd matrix() const;
  Gate inverse() const;
};

Gate make_gate(GateKind kind, std::size_t target, double angle = 0.0,
               std::vector<Control> controls = {});
Gate make_global_phase(double angle, std::vector<Control> controls = {});

struct QubitRange {
  std::size_t first = 0;
  std::size_t count = 0;

  friend bool operator==(const QubitRange&, const QubitRange&) = default;
};

/// Ordered gate list over a fixed register. Ancilla qubits precede system
/// qubits by convention; the ranges are annotations only.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits, QubitRange ancilla = {},
                   QubitRange system = {});

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  const QubitRange& ancilla() const noexcept { return ancilla_; }
  const QubitRange& system() const noexcept { return system_; }
  void set_roles(QubitRange ancilla, QubitRange system);

  /// Validates against the width and appends.
  Circuit& add(Gate g);
  /// Appends all gates of `other`; widths must agree.
  Circuit& append(const Circuit& other);

 private:
  void validate(const Gate& g) const;

  std::size_t num_qubits_ = 0;
  QubitRange ancilla_;
  QubitRange system_;
  std::vector<Gate> gates_;
};

/// Reversed order with every gate inverted.
Circuit compose_adjoint(const Circuit& c);

/// Relabels qubit q as mapping[q] inside a register of `new_width` qubits.
Circuit remap(const Circuit& c, const std::vector<std::size_t>& mapping,
              std::size_t new_width);

/// Adds `control` to every gate.
Circuit add_control(const Circuit& c, Control control);

/// Number of gates with exactly `num_controls` controls.
std::size_t count_gates(const Circuit& c, std::size_t num_controls);
/// Singly-controlled X gates.
std::size_t count_cnots(const Circuit& c);

struct SimulationOptions {
  double warn_norm_tolerance = 1e-9;
  double max_norm_deviation = 1e-6;
  std::size_t qubit_cap = kDefaultQubitCap;
};

/// Applies one gate in place; no normalization checks.
void apply_gate(const Gate& g, std::size_t num_qubits, Statevector& state);

/// Exact post-circuit state. Controlled gates act as identity wherever any
/// control polarity is unmet.
Statevector apply_circuit(const Circuit& c, const Statevector& state,
                          const SimulationOptions& opts = {});

/// Column j is the circuit applied to |j>.
DenseOperator unitary_of(const Circuit& c, const SimulationOptions& opts = {});

/// Basis state |index> on `num_qubits` qubits.
Statevector basis_state(std::size_t num_qubits, std::size_t index);

}  // namespace lcu_ucc
