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

#include "lcu_ucc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>

namespace lcu_ucc {

namespace {

constexpr std::string_view kNames[] = {"H",  "X",  "Y",  "Z",    "RX",
                                       "RY", "RZ", "PHASE", "GLOBALPHASE"};

}  // namespace

std::string_view to_string(GateKind kind) {
  return kNames[static_cast<int>(kind)];
}

GateKind gate_kind_from_string(std::string_view name) {
  for (int k = 0; k < 9; ++k) {
    if (kNames[k] == name) return static_cast<GateKind>(k);
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

bool takes_angle(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::PHASE:
    case GateKind::GLOBALPHASE:
      return true;
    default:
      return false;
  }
}

Eigen::Matrix2cd Gate::matrix() const {
  using namespace std::complex_literals;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::H: m << r, r, r, -r; break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Y: m << 0, -1i, 1i, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::RX: m << c, -1i * s, -1i * s, c; break;
    case GateKind::RY: m << c, -s, s, c; break;
    case GateKind::RZ: m << std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2); break;
    case GateKind::PHASE: m << 1, 0, 0, std::polar(1.0, angle); break;
    case GateKind::GLOBALPHASE:
      m = std::polar(1.0, angle) * Eigen::Matrix2cd::Identity();
      break;
  }
  return m;
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (takes_angle(kind)) g.angle = -angle;
  return g;
}

Gate make_gate(GateKind kind, std::size_t target, double angle,
               std::vector<Control> controls) {
  return Gate{kind, takes_angle(kind) ? angle : 0.0, {target}, std::move(controls)};
}

Gate make_global_phase(double angle, std::vector<Control> controls) {
  return Gate{GateKind::GLOBALPHASE, angle, {}, std::move(controls)};
}

Circuit::Circuit(std::size_t num_qubits, QubitRange ancilla, QubitRange system)
    : num_qubits_(num_qubits) {
  if (ancilla.count == 0 && system.count == 0) system = {0, num_qubits};
  set_roles(ancilla, system);
}

void Circuit::set_roles(QubitRange ancilla, QubitRange system) {
  if (ancilla.first + ancilla.count > num_qubits_ ||
      system.first + system.count > num_qubits_) {
    throw DimensionError("qubit role range exceeds circuit width");
  }
  ancilla_ = ancilla;
  system_ = system;
}

void Circuit::validate(const Gate& g) const {
  if (g.kind == GateKind::GLOBALPHASE ? g.targets.size() > 1 : g.targets.size() != 1) {
    throw std::invalid_argument(std::string(to_string(g.kind)) +
                                " gate has the wrong number of targets");
  }
  std::set<std::size_t> seen;
  auto check = [&](std::size_t q) {
    if (q >= num_qubits_) {
      throw DimensionError("gate qubit " + std::to_string(q) + " outside width " +
                           std::to_string(num_qubits_));
    }
    if (!seen.insert(q).second) {
      throw std::invalid_argument("gate qubits must be pairwise distinct");
    }
  };
  for (auto t : g.targets) check(t);
  for (const auto& c : g.controls) check(c.qubit);
}

Circuit& Circuit::add(Gate g) {
  validate(g);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw DimensionError("cannot append a circuit of width " +
                         std::to_string(other.num_qubits_) + " to width " +
                         std::to_string(num_qubits_));
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit compose_adjoint(const Circuit& c) {
  Circuit out(c.num_qubits(), c.ancilla(), c.system());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.add(it->inverse());
  }
  return out;
}

Circuit remap(const Circuit& c, const std::vector<std::size_t>& mapping,
              std::size_t new_width) {
  if (mapping.size() != c.num_qubits()) {
    throw DimensionError("qubit mapping must cover every qubit of the circuit");
  }
  Circuit out(new_width);
  for (const auto& g : c.gates()) {
    Gate h = g;
    for (auto& t : h.targets) t = mapping[t];
    for (auto& ctl : h.controls) ctl.qubit = mapping[ctl.qubit];
    out.add(std::move(h));
  }
  return out;
}

Circuit add_control(const Circuit& c, Control control) {
  Circuit out(c.num_qubits(), c.ancilla(), c.system());
  for (const auto& g : c.gates()) {
    Gate h = g;
    h.controls.push_back(control);
    out.add(std::move(h));
  }
  return out;
}

std::size_t count_gates(const Circuit& c, std::size_t num_controls) {
  return static_cast<std::size_t>(std::count_if(
      c.gates().begin(), c.gates().end(),
      [&](const Gate& g) { return g.controls.size() == num_controls; }));
}

std::size_t count_cnots(const Circuit& c) {
  return static_cast<std::size_t>(
      std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) {
        return g.kind == GateKind::X && g.controls.size() == 1;
      }));
}

void apply_gate(const Gate& g, std::size_t num_qubits, Statevector& state) {
  auto bit_of = [&](std::size_t q) { return std::uint64_t{1} << (num_qubits - 1 - q); };
  std::uint64_t cmask = 0, cval = 0;
  for (const auto& c : g.controls) {
    cmask |= bit_of(c.qubit);
    if (c.polarity == Polarity::positive) cval |= bit_of(c.qubit);
  }
  const auto dim = static_cast<std::uint64_t>(state.size());

  if (g.kind == GateKind::GLOBALPHASE) {
    const cplx phase = std::polar(1.0, g.angle);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & cmask) == cval) state[static_cast<Eigen::Index>(i)] *= phase;
    }
    return;
  }

  const Eigen::Matrix2cd m = g.matrix();
  const std::uint64_t tb = bit_of(g.targets.front());
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & tb) || (i & cmask) != cval) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | tb);
    const cplx a0 = state[i0], a1 = state[i1];
    state[i0] = m(0, 0) * a0 + m(0, 1) * a1;
    state[i1] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

Statevector apply_circuit(const Circuit& c, const Statevector& state,
                          const SimulationOptions& opts) {
  if (static_cast<std::size_t>(state.size()) != dimension_of(c.num_qubits())) {
    throw DimensionError("state dimension " + std::to_string(state.size()) +
                         " does not match a " + std::to_string(c.num_qubits()) +
                         "-qubit circuit");
  }
  const double deviation = std::abs(state.norm() - 1.0);
  if (deviation > opts.max_norm_deviation) {
    throw std::invalid_argument("input state is not normalized (|norm - 1| = " +
                                std::to_string(deviation) + ")");
  }
  if (deviation > opts.warn_norm_tolerance) {
    std::clog << "warning: input state norm deviates from 1 by " << deviation << "\n";
  }
  Statevector out = state;
  for (const auto& g : c.gates()) apply_gate(g, c.num_qubits(), out);
  return out;
}

Statevector basis_state(std::size_t num_qubits, std::size_t index) {
  const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
  if (static_cast<Eigen::Index>(index) >= dim) {
    throw DimensionError("basis index out of range");
  }
  Statevector s = Statevector::Zero(dim);
  s[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

DenseOperator unitary_of(const Circuit& c, const SimulationOptions& opts) {
  if (c.num_qubits() > opts.qubit_cap) {
    throw ResourceError("circuit of width " + std::to_string(c.num_qubits()) +
                        " exceeds the simulation cap of " +
                        std::to_string(opts.qubit_cap));
  }
  const auto dim = static_cast<Eigen::Index>(dimension_of(c.num_qubits()));
  DenseOperator u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Statevector col = Statevector::Zero(dim);
    col[j] = 1.0;
    for (const auto& g : c.gates()) apply_gate(g, c.num_qubits(), col);
    u.col(j) = col;
  }
  return u;
}

}  // namespace lcu_ucc
