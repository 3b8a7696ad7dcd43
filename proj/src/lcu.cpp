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

#include "lcu_ucc/lcu.hpp"

#include <cmath>
#include <numbers>

namespace lcu_ucc {

Circuit assemble_w(const Circuit& prep, const Circuit& select) {
  if (prep.num_qubits() > select.num_qubits()) {
    throw DimensionError("PREPARE is wider than SELECT");
  }
  if (select.ancilla().count != 0 && select.ancilla().count != prep.num_qubits()) {
    throw DimensionError("PREPARE width does not match the SELECT ancilla range");
  }
  std::vector<std::size_t> identity(prep.num_qubits());
  for (std::size_t q = 0; q < identity.size(); ++q) identity[q] = q;
  const Circuit b = remap(prep, identity, select.num_qubits());

  Circuit w(select.num_qubits(), select.ancilla(), select.system());
  w.append(b).append(select).append(compose_adjoint(b));
  return w;
}

BlockEncoding build_block_encoding(const UccFactor& f, const LcuOptions& opts) {
  BlockEncoding out;
  out.plan = derive_select_plan(f);
  auto prep = prepare_checked(f.rank(), f.theta(), opts.prepare_tolerance, opts.prepare);
  out.prepare_report = prep.report;
  out.w = assemble_w(prep.circuit, synth_select(f, out.plan));
  out.s_one_norm = lcu_coefficients(f.rank(), f.theta()).s_one_norm;
  out.num_ancilla = 2 * f.rank();
  return out;
}

SystemBlock system_block(const Circuit& c, std::size_t num_ancilla) {
  if (num_ancilla > c.num_qubits()) throw DimensionError("more ancillas than qubits");
  const std::size_t ns = c.num_qubits() - num_ancilla;
  const auto sys_dim = static_cast<Eigen::Index>(dimension_of(ns));
  SystemBlock out{DenseOperator(sys_dim, sys_dim), 0.0};
  for (Eigen::Index j = 0; j < sys_dim; ++j) {
    Statevector state = basis_state(c.num_qubits(), static_cast<std::size_t>(j));
    for (const auto& g : c.gates()) apply_gate(g, c.num_qubits(), state);
    out.block.col(j) = state.head(sys_dim);
    out.leakage = std::max(out.leakage, state.tail(state.size() - sys_dim).norm());
  }
  return out;
}

Postselected apply_postselected(const Circuit& w, std::size_t num_ancilla,
                                const Statevector& psi) {
  const std::size_t ns = w.num_qubits() - num_ancilla;
  const auto sys_dim = static_cast<Eigen::Index>(dimension_of(ns));
  if (psi.size() != sys_dim) throw DimensionError("system state has the wrong dimension");
  Statevector full = Statevector::Zero(static_cast<Eigen::Index>(dimension_of(w.num_qubits())));
  full.head(sys_dim) = psi;
  const Statevector out = apply_circuit(w, full);
  const Statevector kept = out.head(sys_dim);
  const double p = kept.squaredNorm();
  if (p < 1e-24) {
    throw ProjectionError("postselection onto |0> ancilla has zero probability");
  }
  return {kept / std::sqrt(p), p};
}

double exact_amplification_norm(std::size_t rounds) {
  return 1.0 / std::sin(std::numbers::pi / (2.0 * (2.0 * static_cast<double>(rounds) + 1.0)));
}

std::size_t rounds_for_norm(double s) {
  std::size_t m = 0;
  while (exact_amplification_norm(m) < s * (1.0 - 1e-13)) ++m;
  return m;
}

LcuAssembly pad_and_synth_oaa(const UccFactor& f, const LcuOptions& opts,
                              std::optional<std::size_t> target_rounds) {
  const std::size_t na = 2 * f.rank();
  const std::size_t ns = f.num_qubits();

  LcuAssembly out;
  out.plan = derive_select_plan(f);
  auto prep = prepare_checked(f.rank(), f.theta(), opts.prepare_tolerance, opts.prepare);
  out.prepare_report = prep.report;
  const Circuit select = synth_select(f, out.plan);

  out.s_one_norm = lcu_coefficients(f.rank(), f.theta()).s_one_norm;
  out.rounds = rounds_for_norm(out.s_one_norm);
  if (target_rounds && exact_amplification_norm(*target_rounds) >= out.s_one_norm) {
    out.rounds = *target_rounds;
  }
  out.s_effective = exact_amplification_norm(out.rounds);
  out.pad_coefficient = (out.s_effective - out.s_one_norm) / 2.0;
  if (out.pad_coefficient < 1e-14 * out.s_effective) out.pad_coefficient = 0.0;
  out.pad_qubits = out.pad_coefficient > 0.0 ? 1 : 0;
  out.num_ancilla = na + out.pad_qubits;

  if (out.pad_qubits == 0) {
    out.w = assemble_w(prep.circuit, select);
    if (std::abs(out.s_effective - out.s_one_norm) > 1e-12 * out.s_effective) {
      out.s_effective = out.s_one_norm;
    }
  } else {
    // Ancillas 0..2n-1, pad qubit 2n, system after. The pad branch carries
    // +c I on code (pad=1, last=0) and -c I on (pad=1, last=1).
    const std::size_t pad = na;
    const std::size_t width = na + 1 + ns;
    std::vector<std::size_t> anc_map(na), sel_map(na + ns);
    for (std::size_t q = 0; q < na; ++q) anc_map[q] = sel_map[q] = q;
    for (std::size_t q = 0; q < ns; ++q) sel_map[na + q] = na + 1 + q;
    const Control off{pad, Polarity::negative};
    const Control on{pad, Polarity::positive};

    Circuit b(width);
    b.add(make_gate(GateKind::RY, pad,
                    2.0 * std::asin(std::sqrt(2.0 * out.pad_coefficient / out.s_effective))));
    b.add(make_gate(GateKind::H, na - 1, 0.0, {on}));
    b.append(add_control(remap(prep.circuit, anc_map, width), off));

    Circuit s = add_control(remap(select, sel_map, width), off);
    s.add(make_global_phase(std::numbers::pi, {on, {na - 1, Polarity::positive}}));

    out.w = Circuit(width, {0, na + 1}, {na + 1, ns});
    out.w.append(b).append(s).append(compose_adjoint(b));
  }
  out.w.set_roles({0, out.num_ancilla}, {out.num_ancilla, ns});

  const std::size_t width = out.w.num_qubits();
  std::vector<Control> all_zero;
  for (std::size_t q = 0; q < out.num_ancilla; ++q) all_zero.push_back({q, Polarity::negative});
  const Gate reflect = make_global_phase(std::numbers::pi, all_zero);
  const Circuit w_dag = compose_adjoint(out.w);

  out.circuit = Circuit(width, out.w.ancilla(), out.w.system());
  out.circuit.append(out.w);
  for (std::size_t r = 0; r < out.rounds; ++r) {
    out.circuit.add(reflect).append(w_dag).add(reflect).append(out.w);
  }
  if (out.rounds % 2 == 1) out.circuit.add(make_global_phase(std::numbers::pi));
  return out;
}

EndToEndReport verify_end_to_end(const UccFactor& f, VerifyMode mode, double tolerance,
                                 const LcuOptions& opts) {
  EndToEndReport r;
  r.theta = f.theta();
  const DenseOperator u = exact_unitary(f);
  const double dim = static_cast<double>(u.rows());

  if (mode == VerifyMode::postselect) {
    const BlockEncoding be = build_block_encoding(f, opts);
    const SystemBlock blk = system_block(be.w, be.num_ancilla);
    r.s = r.s_effective = be.s_one_norm;
    r.prepare_fallback = be.prepare_report.used_fallback;
    const double gram = (blk.block.adjoint() * blk.block).trace().real();
    r.s_estimate = std::sqrt(dim / gram);
    r.success_probability = gram / dim;
    const auto aligned = phase_aligned_distance((be.s_one_norm * blk.block).eval(), u);
    r.deviation = aligned.deviation;
    r.phase = aligned.phase;
    r.leakage = blk.leakage;
    r.pass = r.deviation <= tolerance;
  } else {
    const LcuAssembly a = pad_and_synth_oaa(f, opts);
    const SystemBlock blk = system_block(a.circuit, a.num_ancilla);
    r.s = a.s_one_norm;
    r.s_effective = a.s_effective;
    r.rounds = a.rounds;
    r.prepare_fallback = a.prepare_report.used_fallback;
    const double gram = (blk.block.adjoint() * blk.block).trace().real();
    r.s_estimate = std::sqrt(dim / gram);
    r.success_probability = gram / dim;
    const auto aligned = phase_aligned_distance(blk.block, u);
    r.deviation = aligned.deviation;
    r.phase = aligned.phase;
    r.leakage = blk.leakage;
    r.pass = r.deviation <= tolerance && r.leakage <= tolerance;
  }
  return r;
}

}  // namespace lcu_ucc
