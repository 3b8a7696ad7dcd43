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

#include "lcu_ucc/circuit_io.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace lcu_ucc {

using nlohmann::json;

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates()) {
    json jg;
    jg["kind"] = std::string(to_string(g.kind));
    if (takes_angle(g.kind)) jg["angle"] = g.angle;
    jg["targets"] = g.targets;
    json controls = json::array();
    for (const auto& ctl : g.controls) {
      controls.push_back({{"q", ctl.qubit},
                          {"pol", ctl.polarity == Polarity::positive ? "+" : "-"}});
    }
    jg["controls"] = std::move(controls);
    gates.push_back(std::move(jg));
  }
  return {{"num_qubits", c.num_qubits()},
          {"ancilla", {c.ancilla().first, c.ancilla().count}},
          {"system", {c.system().first, c.system().count}},
          {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c(j.at("num_qubits").get<std::size_t>());
  if (j.contains("ancilla") && j.contains("system")) {
    c.set_roles({j["ancilla"].at(0).get<std::size_t>(), j["ancilla"].at(1).get<std::size_t>()},
                {j["system"].at(0).get<std::size_t>(), j["system"].at(1).get<std::size_t>()});
  }
  for (const auto& jg : j.at("gates")) {
    Gate g{gate_kind_from_string(jg.at("kind").get<std::string>()), 0.0, {}, {}};
    g.angle = jg.value("angle", 0.0);
    g.targets = jg.at("targets").get<std::vector<std::size_t>>();
    for (const auto& jc : jg.value("controls", json::array())) {
      const auto pol = jc.at("pol").get<std::string>();
      if (pol != "+" && pol != "-") throw std::invalid_argument("control polarity must be + or -");
      g.controls.push_back({jc.at("q").get<std::size_t>(),
                            pol == "+" ? Polarity::positive : Polarity::negative});
    }
    c.add(std::move(g));
  }
  return c;
}

ZyzAngles zyz_decompose(const Eigen::Matrix2cd& u) {
  const double global = std::arg(u.determinant()) / 2;
  const Eigen::Matrix2cd w = std::polar(1.0, -global) * u;
  const cplx a = w(0, 0), b = w(1, 0);
  const double beta = 2 * std::atan2(std::abs(b), std::abs(a));
  const double sum = std::abs(a) > 1e-14 ? -2 * std::arg(a) : 0.0;   // alpha + delta
  const double diff = std::abs(b) > 1e-14 ? 2 * std::arg(b) : 0.0;   // alpha - delta
  return {global, (sum + diff) / 2, beta, (sum - diff) / 2};
}

namespace {

Eigen::Matrix2cd unitary_sqrt(const Eigen::Matrix2cd& u) {
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(u);
  const Eigen::Matrix2cd p = es.eigenvectors();
  Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
  d(0, 0) = std::sqrt(es.eigenvalues()(0));
  d(1, 1) = std::sqrt(es.eigenvalues()(1));
  return p * d * p.inverse();
}

void emit_controlled_unitary(Circuit& out, const Eigen::Matrix2cd& u,
                             std::size_t control, std::size_t target) {
  const ZyzAngles z = zyz_decompose(u);
  const std::vector<Control> ctl{{control, Polarity::positive}};
  out.add(make_gate(GateKind::RZ, target, z.delta, ctl));
  out.add(make_gate(GateKind::RY, target, z.beta, ctl));
  out.add(make_gate(GateKind::RZ, target, z.alpha, ctl));
  out.add(make_gate(GateKind::PHASE, control, z.global));
}

void emit_multi_controlled(Circuit& out, const Eigen::Matrix2cd& u,
                           const std::vector<std::size_t>& controls,
                           std::size_t target, bool is_x) {
  if (controls.size() == 1) {
    if (is_x) {
      out.add(make_gate(GateKind::X, target, 0.0, {{controls[0], Polarity::positive}}));
    } else {
      emit_controlled_unitary(out, u, controls[0], target);
    }
    return;
  }
  const std::vector<std::size_t> head(controls.begin(), controls.end() - 1);
  const std::size_t last = controls.back();
  const Eigen::Matrix2cd v = unitary_sqrt(u);
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  emit_controlled_unitary(out, v, last, target);
  emit_multi_controlled(out, x, head, last, true);
  emit_controlled_unitary(out, v.adjoint(), last, target);
  emit_multi_controlled(out, x, head, last, true);
  emit_multi_controlled(out, v, head, target, false);
}

}  // namespace

Circuit decompose_multicontrols(const Circuit& c) {
  Circuit out(c.num_qubits(), c.ancilla(), c.system());
  for (const auto& g : c.gates()) {
    std::vector<std::size_t> flipped;
    std::vector<std::size_t> controls;
    for (const auto& ctl : g.controls) {
      controls.push_back(ctl.qubit);
      if (ctl.polarity == Polarity::negative) flipped.push_back(ctl.qubit);
    }
    for (auto q : flipped) out.add(make_gate(GateKind::X, q));

    if (g.kind == GateKind::GLOBALPHASE && !controls.empty()) {
      // A controlled global phase is a phase gate on the last control.
      const std::size_t target = controls.back();
      controls.pop_back();
      Gate p = make_gate(GateKind::PHASE, target, g.angle);
      if (controls.size() <= 1) {
        for (auto q : controls) p.controls.push_back({q, Polarity::positive});
        out.add(p);
      } else {
        emit_multi_controlled(out, p.matrix(), controls, target, false);
      }
    } else if (controls.size() <= 1) {
      Gate h = g;
      for (auto& ctl : h.controls) ctl.polarity = Polarity::positive;
      out.add(std::move(h));
    } else {
      emit_multi_controlled(out, g.matrix(), controls, g.targets.front(),
                            g.kind == GateKind::X);
    }

    for (auto q : flipped) out.add(make_gate(GateKind::X, q));
  }
  return out;
}

std::string to_qasm(const Circuit& c, const std::string& header) {
  const Circuit flat = decompose_multicontrols(c);
  std::ostringstream os;
  os << std::setprecision(17);
  std::istringstream lines(header);
  for (std::string line; std::getline(lines, line);) os << "// " << line << "\n";
  os << "// gates with two or more controls are expanded by an ancilla-free\n"
        "// recursive square-root decomposition; exported CNOT counts exceed\n"
        "// the 8k-12 per k-controlled gate cost model\n";
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_qubits() << "];\n";

  auto name = [](GateKind k, bool controlled) -> std::string {
    switch (k) {
      case GateKind::H: return controlled ? "ch" : "h";
      case GateKind::X: return controlled ? "cx" : "x";
      case GateKind::Y: return controlled ? "cy" : "y";
      case GateKind::Z: return controlled ? "cz" : "z";
      case GateKind::RX: return controlled ? "crx" : "rx";
      case GateKind::RY: return controlled ? "cry" : "ry";
      case GateKind::RZ: return controlled ? "crz" : "rz";
      case GateKind::PHASE: return controlled ? "cu1" : "u1";
      case GateKind::GLOBALPHASE: return "gphase";
    }
    return {};
  };

  for (const auto& g : flat.gates()) {
    if (g.kind == GateKind::GLOBALPHASE) {
      os << "// global phase " << g.angle << "\n";
      continue;
    }
    const bool controlled = !g.controls.empty();
    os << name(g.kind, controlled);
    if (takes_angle(g.kind)) os << "(" << g.angle << ")";
    os << " ";
    if (controlled) os << "q[" << g.controls.front().qubit << "],";
    os << "q[" << g.targets.front() << "];\n";
  }
  return os.str();
}

}  // namespace lcu_ucc
