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

#include "lcu_ucc/select.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lcu_ucc {

namespace {

using Mask = std::uint64_t;

std::size_t code_bit(std::size_t ancilla_qubit, std::size_t num_ancilla) {
  return num_ancilla - 1 - ancilla_qubit;
}

Mask bit(std::size_t q) { return Mask{1} << q; }

// True when v lies in the GF(2) span of the generators. Rows are kept with
// distinct leading bits in descending order, so min(v, v ^ r) eliminates.
bool span_contains(const std::vector<Mask>& generators, Mask v) {
  std::vector<Mask> rows;
  for (Mask g : generators) {
    for (Mask r : rows) g = std::min(g, g ^ r);
    if (g) {
      rows.push_back(g);
      std::sort(rows.rbegin(), rows.rend());
    }
  }
  for (Mask r : rows) v = std::min(v, v ^ r);
  return v == 0;
}

struct Sector {
  std::vector<PauliString> strings;  // letters only, sorted
  std::set<Mask> z_offsets;          // z-mask xor against the reference
};

Sector make_sector(const PauliSum& structural, const PauliString& reference,
                   bool xy) {
  Sector out;
  for (const auto& [s, c] : structural) {
    if (is_xy_sector(s) != xy) continue;
    out.strings.push_back(s);
    if (s.x_mask() != reference.x_mask()) {
      throw PlanningError("string is not reachable from the reference by Z-masks",
                          s.letters());
    }
    out.z_offsets.insert(s.z_mask() ^ reference.z_mask());
  }
  return out;
}

PauliString choose_xy_reference(const UccFactor& f, const PauliSum& excitation) {
  const auto active = f.active_orbitals();
  Mask x = 0;
  for (auto q : active) x |= bit(q);
  Mask z = bit(active.front());
  for (auto q : jw_chain_qubits(f)) z |= bit(q);
  const PauliString preferred(f.num_qubits(), x, z);
  if (excitation.terms().count(preferred)) return preferred;
  return excitation.terms().begin()->first;  // lexicographically least
}

PauliString choose_iz_reference(const PauliSum& projector) {
  const PauliString id(projector.num_qubits());
  if (projector.terms().count(id)) return id;
  return projector.terms().begin()->first;
}

// Weight-2 masks along the chain of active orbitals, middle edge first, then
// the upper half, then the lower half; followed by every other weight-<=2
// Z-mask on active orbitals.
std::vector<Mask> candidate_masks(const std::vector<std::size_t>& active, std::size_t rank) {
  std::vector<Mask> out;
  auto edge = [&](std::size_t t) { return bit(active[t]) | bit(active[t + 1]); };
  out.push_back(edge(rank - 1));
  for (std::size_t t = rank; t + 1 < active.size(); ++t) out.push_back(edge(t));
  for (std::size_t t = 0; t + 1 < rank; ++t) out.push_back(edge(t));
  for (std::size_t a = 0; a < active.size(); ++a) {
    for (std::size_t b = a + 1; b < active.size(); ++b) {
      out.push_back(bit(active[a]) | bit(active[b]));
    }
  }
  for (auto q : active) out.push_back(bit(q));
  return out;
}

std::complex<double> unit_phase(std::complex<double> c) {
  return std::abs(c) > 0 ? c / std::abs(c) : std::complex<double>{1.0, 0.0};
}

}  // namespace

SelectPlan derive_select_plan(const UccFactor& f) {
  const std::size_t n = f.rank();
  const std::size_t num_ancilla = 2 * n;
  const std::size_t half = std::size_t{1} << (num_ancilla - 1);
  const std::size_t nsys = f.num_qubits();

  const PauliSum excitation = excitation_pauli_sum(f);
  const PauliSum projector = projector_pauli_sum(f);

  SelectPlan plan;
  plan.rank = n;
  plan.num_system = nsys;
  plan.sector_qubit = 0;
  plan.xy_reference = choose_xy_reference(f, excitation);
  plan.iz_reference = choose_iz_reference(projector);

  const Sector xy = make_sector(excitation, plan.xy_reference, true);
  const Sector iz = make_sector(projector, plan.iz_reference, false);
  if (xy.strings.size() != half || iz.strings.size() != half) {
    throw PlanningError("sector sizes differ from 2^{2n-1}",
                        std::to_string(xy.strings.size()) + "/" +
                            std::to_string(iz.strings.size()));
  }

  // Greedy basis of masks lying in both offset sets.
  std::vector<Mask> chosen;
  for (Mask m : candidate_masks(f.active_orbitals(), n)) {
    if (chosen.size() == num_ancilla - 1) break;
    if (!xy.z_offsets.count(m) || !iz.z_offsets.count(m)) continue;
    if (span_contains(chosen, m)) continue;
    chosen.push_back(m);
  }
  for (const auto* sector : {&xy, &iz}) {
    for (const auto& s : sector->strings) {
      const PauliString& ref = sector == &xy ? plan.xy_reference : plan.iz_reference;
      if (!span_contains(chosen, s.z_mask() ^ ref.z_mask())) {
        throw PlanningError("no weight-2 Z-mask decomposition reaches", s.letters());
      }
    }
  }
  if (chosen.size() != num_ancilla - 1) {
    throw PlanningError("mask basis has the wrong size", std::to_string(chosen.size()));
  }
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    plan.steps.push_back({t + 1, Polarity::positive, PauliString(nsys, 0, chosen[t])});
  }

  plan.code_table.resize(2 * half);
  std::set<std::pair<Mask, Mask>> produced;
  const double t = f.theta();
  for (std::size_t code = 0; code < 2 * half; ++code) {
    const bool is_xy = (code >> code_bit(plan.sector_qubit, num_ancilla)) & 1u;
    PauliString s = is_xy ? plan.xy_reference : plan.iz_reference;
    for (const auto& step : plan.steps) {
      if ((code >> code_bit(step.ancilla_qubit, num_ancilla)) & 1u) s = step.z_mask * s;
    }
    if (!produced.emplace(s.x_mask(), s.z_mask()).second) {
      throw PlanningError("two codes map to the same string", s.letters());
    }
    std::complex<double> alpha;
    if (is_xy) {
      alpha = std::sin(t) * excitation.coefficient(s);
      if (excitation.coefficient(s) == 0.0) {
        throw PlanningError("code reaches a string outside the XY sector", s.letters());
      }
    } else {
      if (projector.coefficient(s) == 0.0) {
        throw PlanningError("code reaches a string outside the IZ sector", s.letters());
      }
      alpha = (std::cos(t) - 1.0) * projector.coefficient(s) + (s.is_identity() ? 1.0 : 0.0);
    }
    plan.code_table[code] = {code, s, alpha, unit_phase(alpha) / s.phase()};
  }
  return plan;
}

Circuit synth_select(const UccFactor& f, const SelectPlan& plan) {
  const std::size_t na = plan.num_ancilla();
  if (plan.num_system != f.num_qubits() || plan.rank != f.rank()) {
    throw DimensionError("select plan does not match the factor's register");
  }
  const std::size_t width = na + plan.num_system;
  Circuit c(width, {0, na}, {na, plan.num_system});

  auto letter_gate = [](char letter) {
    return letter == 'X' ? GateKind::X : letter == 'Y' ? GateKind::Y : GateKind::Z;
  };
  auto apply_reference = [&](const PauliString& ref, Polarity pol) {
    for (std::size_t q = 0; q < plan.num_system; ++q) {
      const char l = ref.letter(q);
      if (l == 'I') continue;
      c.add(make_gate(letter_gate(l), na + q, 0.0, {{plan.sector_qubit, pol}}));
    }
  };
  apply_reference(plan.xy_reference, Polarity::positive);
  apply_reference(plan.iz_reference, Polarity::negative);

  for (const auto& step : plan.steps) {
    for (std::size_t q = 0; q < plan.num_system; ++q) {
      if ((step.z_mask.z_mask() >> q) & 1u) {
        c.add(make_gate(GateKind::Z, na + q, 0.0, {{step.ancilla_qubit, step.polarity}}));
      }
    }
  }

  for (const auto& entry : plan.code_table) {
    if (std::abs(entry.phase_correction - 1.0) < 1e-15) continue;
    std::vector<Control> controls;
    for (std::size_t a = 0; a < na; ++a) {
      const bool set = (entry.code >> code_bit(a, na)) & 1u;
      controls.push_back({a, set ? Polarity::positive : Polarity::negative});
    }
    c.add(make_global_phase(std::arg(entry.phase_correction), std::move(controls)));
  }
  return c;
}

SelectReport verify_select(const UccFactor& f, const SelectPlan& plan,
                           const Circuit& circuit, double tolerance) {
  const std::size_t na = plan.num_ancilla();
  const std::size_t ns = f.num_qubits();
  if (circuit.num_qubits() != na + ns) {
    throw DimensionError("SELECT circuit width does not match the plan");
  }
  const std::size_t sys_dim = dimension_of(ns);
  SelectReport report;
  for (const auto& entry : plan.code_table) {
    const DenseOperator expected = entry.applied_phase() * to_dense(entry.string.without_phase(), ns);
    double worst = 0;
    for (std::size_t j = 0; j < sys_dim; ++j) {
      Statevector state = basis_state(na + ns, entry.code * sys_dim + j);
      for (const auto& g : circuit.gates()) apply_gate(g, circuit.num_qubits(), state);
      Statevector want = Statevector::Zero(state.size());
      want.segment(static_cast<Eigen::Index>(entry.code * sys_dim),
                   static_cast<Eigen::Index>(sys_dim)) =
          expected.col(static_cast<Eigen::Index>(j));
      worst = std::max(worst, (state - want).norm());
    }
    if (worst > report.max_deviation) {
      report.max_deviation = worst;
      report.worst_code = entry.code;
    }
    ++report.codes_checked;
  }
  report.pass = report.max_deviation <= tolerance;
  return report;
}

nlohmann::json plan_to_json(const SelectPlan& plan) {
  using nlohmann::json;
  auto phase_json = [](std::complex<double> z) { return json::array({z.real(), z.imag()}); };
  json steps = json::array();
  for (const auto& s : plan.steps) {
    steps.push_back({{"ancilla_qubit", s.ancilla_qubit},
                     {"polarity", s.polarity == Polarity::positive ? "+" : "-"},
                     {"z_mask", s.z_mask.letters()}});
  }
  json table = json::array();
  for (const auto& e : plan.code_table) {
    std::string bits(plan.num_ancilla(), '0');
    for (std::size_t a = 0; a < plan.num_ancilla(); ++a) {
      if ((e.code >> code_bit(a, plan.num_ancilla())) & 1u) bits[a] = '1';
    }
    table.push_back({{"code", bits},
                     {"string", e.string.to_string()},
                     {"coefficient", phase_json(e.coefficient)},
                     {"phase_correction", phase_json(e.phase_correction)}});
  }
  return {{"rank", plan.rank},
          {"num_system", plan.num_system},
          {"sector_qubit", plan.sector_qubit},
          {"xy_reference", plan.xy_reference.letters()},
          {"iz_reference", plan.iz_reference.letters()},
          {"steps", std::move(steps)},
          {"code_table", std::move(table)}};
}

}  // namespace lcu_ucc
