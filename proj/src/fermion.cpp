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

#include "lcu_ucc/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lcu_ucc {

namespace {

void require_ascending(const std::vector<std::size_t>& v, const char* what) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k - 1] >= v[k]) {
      throw std::invalid_argument(std::string(what) + " orbitals must be strictly ascending");
    }
  }
}

}  // namespace

UccFactor::UccFactor(std::vector<std::size_t> occupied,
                     std::vector<std::size_t> virtuals, double theta,
                     std::size_t num_qubits)
    : occupied_(std::move(occupied)),
      virtuals_(std::move(virtuals)),
      theta_(theta),
      num_qubits_(num_qubits) {
  if (occupied_.empty()) throw std::invalid_argument("rank must be at least 1");
  if (occupied_.size() != virtuals_.size()) {
    throw std::invalid_argument("occupied and virtual lists differ in length");
  }
  if (num_qubits_ > PauliString::kMaxQubits) {
    throw DimensionError("at most 64 spin-orbitals are supported");
  }
  require_ascending(occupied_, "occupied");
  require_ascending(virtuals_, "virtual");
  std::set<std::size_t> seen;
  for (auto idx : active_orbitals()) {
    if (idx >= num_qubits_) throw DimensionError("orbital index exceeds qubit count");
    if (!seen.insert(idx).second) {
      throw std::invalid_argument("occupied and virtual orbitals overlap");
    }
  }
}

std::vector<std::size_t> UccFactor::active_orbitals() const {
  std::vector<std::size_t> out = occupied_;
  out.insert(out.end(), virtuals_.begin(), virtuals_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string UccFactor::describe() const {
  std::ostringstream os;
  os << "occ={";
  for (std::size_t k = 0; k < occupied_.size(); ++k) os << (k ? "," : "") << occupied_[k];
  os << "} virt={";
  for (std::size_t k = 0; k < virtuals_.size(); ++k) os << (k ? "," : "") << virtuals_[k];
  os << "} N=" << num_qubits_;
  return os.str();
}

PauliSum jw_ladder(std::size_t index, Ladder kind, std::size_t num_qubits) {
  if (index >= num_qubits) {
    throw DimensionError("orbital " + std::to_string(index) + " out of range for " +
                         std::to_string(num_qubits) + " qubits");
  }
  std::uint64_t chain = 0;
  for (std::size_t q = index + 1; q < num_qubits; ++q) chain |= std::uint64_t{1} << q;
  const std::uint64_t bit = std::uint64_t{1} << index;
  const PauliString x(num_qubits, bit, chain);
  const PauliString y(num_qubits, bit, chain | bit);
  const double sign = kind == Ladder::annihilate ? 1.0 : -1.0;
  PauliSum out(num_qubits);
  out.add_term(x, 0.5);
  out.add_term(y, {0.0, 0.5 * sign});
  return out;
}

namespace {

PauliSum excitation_operator(const UccFactor& f) {
  const std::size_t n = f.num_qubits();
  PauliSum a = PauliSum::identity(n);
  // Leftmost factor first: creators a_n ... a_1, then annihilators i_1 ... i_n.
  const auto& virt = f.virtuals();
  for (auto it = virt.rbegin(); it != virt.rend(); ++it) {
    a = a * jw_ladder(*it, Ladder::create, n);
  }
  for (auto idx : f.occupied()) a = a * jw_ladder(idx, Ladder::annihilate, n);
  return a.pruned();
}

}  // namespace

PauliSum excitation_pauli_sum(const UccFactor& f) {
  const PauliSum a = excitation_operator(f);
  return (a - a.adjoint()).pruned();
}

PauliSum projector_pauli_sum(const UccFactor& f) {
  const PauliSum a = excitation_operator(f);
  const PauliSum ad = a.adjoint();
  return (a * ad + ad * a).pruned();
}

PauliSum ucc_factor_expand(const UccFactor& f) {
  const double t = f.theta();
  PauliSum out = PauliSum::identity(f.num_qubits());
  out += excitation_pauli_sum(f) * std::sin(t);
  out += projector_pauli_sum(f) * (std::cos(t) - 1.0);
  // Exact cancellations (theta = 0, pi, ...) leave structural zeros behind.
  return out.pruned();
}

DenseOperator exact_unitary(const UccFactor& f, std::size_t cap) {
  const DenseOperator generator = to_dense(excitation_pauli_sum(f), f.num_qubits(), cap);
  return matrix_exp((f.theta() * generator).eval());
}

std::vector<std::size_t> jw_chain_qubits(const UccFactor& f) {
  const auto active = f.active_orbitals();
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < f.num_qubits(); ++q) {
    if (std::binary_search(active.begin(), active.end(), q)) continue;
    const auto below = std::lower_bound(active.begin(), active.end(), q) - active.begin();
    if (below % 2 == 1) out.push_back(q);
  }
  return out;
}

}  // namespace lcu_ucc
