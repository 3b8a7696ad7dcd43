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

// Independent dense references for the tests: Fock-space ladder operators
// built from bit manipulation and small random generators.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lcu_ucc/dense.hpp"
#include "lcu_ucc/fermion.hpp"
#include "lcu_ucc/pauli.hpp"

namespace lcu_ucc::testing {

/// a_k on N modes, qubit 0 as the most significant bit, sign from the
/// occupations of modes above k.
inline DenseOperator fock_annihilator(std::size_t k, std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseOperator a = DenseOperator::Zero(dim, dim);
  const std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    if (!(col & bit)) continue;
    const std::uint64_t above = col & (bit - 1);  // modes k+1..N-1
    const double sign = (std::popcount(above) % 2) ? -1.0 : 1.0;
    a(static_cast<Eigen::Index>(col ^ bit), static_cast<Eigen::Index>(col)) = sign;
  }
  return a;
}

/// Dense A = a^dag_{a_n}...a^dag_{a_1} a_{i_1}...a_{i_n} from Fock operators.
inline DenseOperator fock_excitation(const UccFactor& f) {
  const std::size_t n = f.num_qubits();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseOperator a = DenseOperator::Identity(dim, dim);
  const auto& v = f.virtuals();
  for (auto it = v.rbegin(); it != v.rend(); ++it) a = a * fock_annihilator(*it, n).adjoint();
  for (std::size_t i : f.occupied()) a = a * fock_annihilator(i, n);
  return a;
}

inline PauliString random_string(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t mask = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return PauliString(n, rng() & mask, rng() & mask, static_cast<int>(rng() & 3));
}

inline const std::vector<double>& theta_grid() {
  static const std::vector<double> grid = {-0.3, 0.3, 0.7853981633974483, 1.0,
                                           1.5707963267948966, 2.5};
  return grid;
}

/// Factors covering n = 1, 2 with adjacent and gapped orbitals.
inline std::vector<UccFactor> small_factors() {
  return {
      UccFactor({0}, {1}, 0.0, 2),
      UccFactor({0}, {2}, 0.0, 4),
      UccFactor({0, 1}, {2, 3}, 0.0, 4),
      UccFactor({0, 1}, {4, 6}, 0.0, 7),
  };
}

/// Reference rank-2 expansion, letters on qubits l, k, j, i = 0..3:
/// sign of each string inside the i sin(t)/8 bracket.
inline std::vector<std::pair<std::string, int>> reference_rank2_xy() {
  return {{"XXYX", 1},  {"YXYY", 1},  {"XYYY", 1},  {"XXXY", 1},
          {"YXXX", -1}, {"XYXX", -1}, {"YYYX", -1}, {"YYXY", -1}};
}

/// Sign of each string inside the (cos(t) - 1)/8 bracket. The identity is
/// listed separately because the expansion folds it into the 1.
inline std::vector<std::pair<std::string, int>> reference_rank2_iz() {
  return {{"IIZZ", 1},  {"ZZII", 1},  {"ZIZI", -1}, {"IZZI", -1},
          {"ZIIZ", -1}, {"IZIZ", -1}, {"ZZZZ", 1}};
}

}  // namespace lcu_ucc::testing
