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

#include <string>

#include "json.hpp"
#include "lcu_ucc/circuit.hpp"

namespace lcu_ucc {

/// {"num_qubits", "ancilla": [first, count], "system": [first, count],
///  "gates": [{"kind", "angle"?, "targets", "controls": [{"q", "pol"}]}]}
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

/// Single-qubit unitary as e^{i global} RZ(alpha) RY(beta) RZ(delta).
struct ZyzAngles {
  double global;
  double alpha;
  double beta;
  double delta;
};
ZyzAngles zyz_decompose(const Eigen::Matrix2cd& u);

/// Rewrites every gate so that it carries at most one positive control.
///
/// Negative controls are conjugated by X. A k-controlled U (k >= 2) is
/// expanded recursively without ancillas:
///
///   C^k U = C^{k-1}V . C^{k-1}X . C V^dag . C^{k-1}X . C V,   V^2 = U,
///
/// where the singly-controlled V are lowered to controlled RZ/RY/RZ plus a
/// phase on the control. The result grows exponentially in k and its CNOT
/// count is well above the linear 8k-12 accounting used by the cost model.
Circuit decompose_multicontrols(const Circuit& c);

/// OpenQASM 2.0 text. `header` lines are emitted as leading comments.
std::string to_qasm(const Circuit& c, const std::string& header = {});

}  // namespace lcu_ucc
