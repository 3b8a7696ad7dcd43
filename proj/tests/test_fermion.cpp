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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lcu_ucc/errors.hpp"
#include "lcu_ucc/fermion.hpp"
#include "oracles.hpp"

namespace lcu_ucc {
namespace {

using testing::fock_annihilator;
using testing::fock_excitation;

PauliString P(std::string_view s) { return PauliString::from_letters(s); }

std::vector<UccFactor> factors_up_to_rank3() {
  return {UccFactor({0}, {1}, 0.0, 2),       UccFactor({1}, {3}, 0.0, 4),
          UccFactor({0, 1}, {2, 3}, 0.0, 4), UccFactor({0, 2}, {3, 5}, 0.0, 6),
          UccFactor({0, 1, 2}, {3, 4, 5}, 0.0, 6)};
}

TEST(UccFactor, Validation) {
  EXPECT_THROW(UccFactor({}, {}, 0.0, 2), std::invalid_argument);
  EXPECT_THROW(UccFactor({0}, {1, 2}, 0.0, 3), std::invalid_argument);
  EXPECT_THROW(UccFactor({1, 0}, {2, 3}, 0.0, 4), std::invalid_argument);
  EXPECT_THROW(UccFactor({0, 1}, {1, 2}, 0.0, 4), std::invalid_argument);
  EXPECT_THROW(UccFactor({0}, {4}, 0.0, 4), std::invalid_argument);
  const UccFactor f({0, 3}, {1, 5}, 0.2, 6);
  EXPECT_EQ(f.rank(), 2u);
  EXPECT_EQ(f.active_orbitals(), (std::vector<std::size_t>{0, 1, 3, 5}));
}

TEST(JordanWigner, SingleModeLadders) {
  const auto a = jw_ladder(0, Ladder::annihilate, 1);
  EXPECT_EQ(a.coefficient(P("X")), cplx(0.5, 0));
  EXPECT_EQ(a.coefficient(P("Y")), cplx(0, 0.5));
  const auto c = jw_ladder(0, Ladder::create, 1);
  EXPECT_EQ(c.coefficient(P("X")), cplx(0.5, 0));
  EXPECT_EQ(c.coefficient(P("Y")), cplx(0, -0.5));
}

TEST(JordanWigner, TwoModeAnnihilatorMatchesFock) {
  const auto a = jw_ladder(0, Ladder::annihilate, 2);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.coefficient(P("XZ")), cplx(0.5, 0));
  EXPECT_EQ(a.coefficient(P("YZ")), cplx(0, 0.5));
  EXPECT_LE((to_dense(a, 2) - fock_annihilator(0, 2)).norm(), 1e-14);
}

TEST(JordanWigner, AllModesMatchFockAndAnticommute) {
  const std::size_t n = 4;
  for (std::size_t k = 0; k < n; ++k) {
    const DenseOperator ak = to_dense(jw_ladder(k, Ladder::annihilate, n), n);
    EXPECT_LE((ak - fock_annihilator(k, n)).norm(), 1e-14);
    EXPECT_LE((to_dense(jw_ladder(k, Ladder::create, n), n) - ak.adjoint()).norm(), 1e-14);
    for (std::size_t l = 0; l < n; ++l) {
      const DenseOperator al = to_dense(jw_ladder(l, Ladder::annihilate, n), n);
      const DenseOperator anti = ak * al.adjoint() + al.adjoint() * ak;
      const DenseOperator expect =
          (k == l ? 1.0 : 0.0) * DenseOperator::Identity(1 << n, 1 << n);
      EXPECT_LE((anti - expect).norm(), 1e-14);
      EXPECT_LE((ak * al + al * ak).norm(), 1e-14);
    }
  }
  EXPECT_THROW(jw_ladder(4, Ladder::create, 4), DimensionError);
}

TEST(Excitation, RankOneStrings) {
  const UccFactor f({0}, {1}, 0.0, 2);
  const auto k = excitation_pauli_sum(f);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_NEAR(std::abs(k.coefficient(P("YX")) - cplx(0, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k.coefficient(P("XY")) - cplx(0, -0.5)), 0.0, 1e-15);
}

TEST(Excitation, MatchesFockOracleAndCounts) {
  for (const auto& f : factors_up_to_rank3()) {
    const auto k = excitation_pauli_sum(f);
    const DenseOperator a = fock_excitation(f);
    EXPECT_LE((to_dense(k, f.num_qubits()) - (a - a.adjoint())).norm(), 1e-12) << f.describe();
    const std::size_t n = f.rank();
    EXPECT_EQ(k.size(), std::size_t{1} << (2 * n - 1));
    for (const auto& [s, c] : k) {
      EXPECT_NEAR(c.real(), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(c), 1.0 / static_cast<double>(k.size()), 1e-15);
      EXPECT_TRUE(is_xy_sector(s));
      for (const auto& [t, d] : k) EXPECT_TRUE(commutes(s, t));
    }
  }
}

TEST(Excitation, TermCountRankFour) {
  const UccFactor f({0, 1, 2, 3}, {4, 5, 6, 7}, 0.0, 8);
  EXPECT_EQ(excitation_pauli_sum(f).size(), 128u);
  EXPECT_EQ(ucc_factor_expand(f.with_theta(0.4)).size(), 256u);
}

TEST(Excitation, CubeAndSquareIdentities) {
  for (const auto& f : factors_up_to_rank3()) {
    const DenseOperator k = to_dense(excitation_pauli_sum(f), f.num_qubits());
    const DenseOperator p = to_dense(projector_pauli_sum(f), f.num_qubits());
    // K^3 = -K: K is anti-Hermitian with spectrum {0, +i, -i}.
    EXPECT_LE((k * k * k + k).norm(), 1e-12) << f.describe();
    EXPECT_LE((k * k + p).norm(), 1e-12) << f.describe();
    for (const auto& [s, c] : projector_pauli_sum(f)) EXPECT_TRUE(s.is_diagonal());
  }
}

TEST(Expansion, ThetaZeroIsIdentity) {
  for (const auto& f : factors_up_to_rank3()) {
    const auto e = ucc_factor_expand(f);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e.coefficient(PauliString(f.num_qubits())), cplx(1, 0));
  }
}

TEST(Expansion, RankTwoAtHalfPi) {
  const UccFactor f({0, 1}, {2, 3}, std::numbers::pi / 2, 4);
  const auto e = ucc_factor_expand(f);
  ASSERT_EQ(e.size(), 16u);
  int xy = 0, iz = 0;
  for (const auto& [s, c] : e) {
    if (s.is_identity()) {
      EXPECT_NEAR(std::abs(c - cplx(7.0 / 8, 0)), 0.0, 1e-12);
    } else if (s.is_diagonal()) {
      ++iz;
      EXPECT_NEAR(std::abs(c), 1.0 / 8, 1e-12) << s.letters();
      EXPECT_NEAR(c.imag(), 0.0, 1e-12);
    } else {
      ++xy;
      EXPECT_NEAR(std::abs(c), 1.0 / 8, 1e-12);
      EXPECT_NEAR(c.real(), 0.0, 1e-12);
    }
  }
  EXPECT_EQ(xy, 8);
  EXPECT_EQ(iz, 7);
}

TEST(Expansion, RankTwoSignsAgainstReferenceList) {
  // Reference list with l, k, j, i on qubits 0..3. The diagonal signs do not
  // depend on the operator ordering; the XY block of our ordering
  // a^dag_3 a^dag_2 a_0 a_1 is minus the reference a^dag_i a^dag_j a_k a_l.
  for (double th : testing::theta_grid()) {
    const auto e = ucc_factor_expand(UccFactor({0, 1}, {2, 3}, th, 4));
    const double cm1 = std::cos(th) - 1;
    for (const auto& [str, sign] : testing::reference_rank2_iz()) {
      EXPECT_NEAR(std::abs(e.coefficient(P(str)) - sign * cm1 / 8), 0.0, 1e-12) << str;
    }
    for (const auto& [str, sign] : testing::reference_rank2_xy()) {
      EXPECT_NEAR(std::abs(e.coefficient(P(str)) + cplx(0, sign * std::sin(th) / 8)), 0.0,
                  1e-12)
          << str;
    }
  }
}

TEST(Expansion, CoefficientMagnitudesAllRanks) {
  for (const auto& f0 : factors_up_to_rank3()) {
    for (double th : testing::theta_grid()) {
      const auto f = f0.with_theta(th);
      const auto e = ucc_factor_expand(f);
      const double d = static_cast<double>(std::size_t{1} << (2 * f.rank() - 1));
      EXPECT_EQ(e.size(), std::size_t{2} * static_cast<std::size_t>(d));
      for (const auto& [s, c] : e) {
        if (s.is_identity()) {
          EXPECT_NEAR(std::abs(c - cplx(1 + (std::cos(th) - 1) / d, 0)), 0.0, 1e-12);
        } else if (s.is_diagonal()) {
          EXPECT_NEAR(std::abs(c), std::abs(std::cos(th) - 1) / d, 1e-12);
        } else {
          EXPECT_NEAR(std::abs(c), std::abs(std::sin(th)) / d, 1e-12);
        }
      }
    }
  }
}

TEST(Expansion, MatchesExactUnitaryOnGrid) {
  for (const auto& f0 : factors_up_to_rank3()) {
    for (double th : {-0.3, 0.3, 0.7853981633974483, 1.0, 1.1, 1.5707963267948966, 2.5, 0.7}) {
      const auto f = f0.with_theta(th);
      const DenseOperator u = exact_unitary(f);
      const DenseOperator e = to_dense(ucc_factor_expand(f), f.num_qubits());
      EXPECT_LE(spectral_norm(e - u), 1e-10) << f.describe() << " theta=" << th;
      EXPECT_LE(unitarity_defect(u), 1e-12);
    }
  }
}

TEST(Expansion, RankOneMatchesFockExponential) {
  const UccFactor f({0}, {1}, 0.3, 2);
  const DenseOperator a = fock_excitation(f);
  const DenseOperator u = matrix_exp((0.3 * (a - a.adjoint())).eval());
  EXPECT_LE((to_dense(ucc_factor_expand(f), 2) - u).norm(), 1e-12);
}

TEST(ExactUnitary, ThetaZeroAndPeriodicity) {
  const UccFactor f({0, 1}, {2, 3}, 0.0, 4);
  EXPECT_LE((exact_unitary(f) - DenseOperator::Identity(16, 16)).norm(), 1e-14);
  const DenseOperator u = exact_unitary(f.with_theta(0.9));
  const DenseOperator v = exact_unitary(f.with_theta(0.9 + 2 * std::numbers::pi));
  EXPECT_LE((u - v).norm(), 1e-10);
}

TEST(ExactUnitary, CapEnforced) {
  const UccFactor f({0}, {1}, 0.1, 16);
  EXPECT_THROW(exact_unitary(f), ResourceError);
}

TEST(JordanWigner, ChainQubits) {
  EXPECT_TRUE(jw_chain_qubits(UccFactor({0, 1}, {2, 3}, 0.0, 4)).empty());
  // Chains from a_0 and a_1 cancel over qubits 2 and 3; only 5 survives.
  EXPECT_EQ(jw_chain_qubits(UccFactor({0, 1}, {4, 6}, 0.0, 7)), (std::vector<std::size_t>{5}));
  EXPECT_EQ(jw_chain_qubits(UccFactor({0}, {3}, 0.0, 5)), (std::vector<std::size_t>{1, 2}));
}

}  // namespace
}  // namespace lcu_ucc
