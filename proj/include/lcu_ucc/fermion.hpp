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
#include <string>
#include <vector>

#include "lcu_ucc/dense.hpp"
#include "lcu_ucc/pauli.hpp"

namespace lcu_ucc {

/// One factor exp(theta (A - A^dagger)) of the factorized UCC product, with
///
///   A = a^dag_{a_n} ... a^dag_{a_1} a_{i_1} ... a_{i_n},
///
/// occupied i_1 < ... < i_n and virtuals a_1 < ... < a_n. The rank is the
/// length of either list.
class UccFactor {
 public:
  UccFactor(std::vector<std::size_t> occupied, std::vector<std::size_t> virtuals,
            double theta, std::size_t num_qubits);

  const std::vector<std::size_t>& occupied() const noexcept { return occupied_; }
  const std::vector<std::size_t>& virtuals() const noexcept { return virtuals_; }
  double theta() const noexcept { return theta_; }
  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t rank() const noexcept { return occupied_.size(); }

  /// Same orbitals, different amplitude.
  UccFactor with_theta(double theta) const {
    return {occupied_, virtuals_, theta, num_qubits_};
  }

  /// All 2n active orbitals, ascending.
  std::vector<std::size_t> active_orbitals() const;

  std::string describe() const;

 private:
  std::vector<std::size_t> occupied_;
  std::vector<std::size_t> virtuals_;
  double theta_;
  std::size_t num_qubits_;
};

enum class Ladder { create, annihilate };

/// 1/2 (X -/+ iY)_index (x) Z_{index+1} ... Z_{N-1}.
PauliSum jw_ladder(std::size_t index, Ladder kind, std::size_t num_qubits);

/// A - A^dagger as a Pauli sum (theta not applied).
PauliSum excitation_pauli_sum(const UccFactor& f);

/// A A^dagger + A^dagger A, i.e. minus (A - A^dagger)^2.
PauliSum projector_pauli_sum(const UccFactor& f);

/// I + sin(theta) (A - A^dagger) + (cos(theta) - 1)(A A^dagger + A^dagger A).
PauliSum ucc_factor_expand(const UccFactor& f);

/// exp(theta (A - A^dagger)) by Taylor scaling-and-squaring on the dense
/// generator; shares nothing with the closed-form expansion.
DenseOperator exact_unitary(const UccFactor& f, std::size_t cap = kDefaultQubitCap);

/// Non-active qubits carrying a Jordan-Wigner Z in every excitation string.
std::vector<std::size_t> jw_chain_qubits(const UccFactor& f);

}  // namespace lcu_ucc
