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

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "lcu_ucc/circuit.hpp"

namespace lcu_ucc {

/// The three distinct LCU coefficient families of a rank-n factor, with
/// D = 2^{2n-1}: one identity term 1 + (cos t - 1)/D, D - 1 projector terms
/// (cos t - 1)/D (signs carried per string) and D excitation terms
/// i sin t / D.
struct LcuCoefficients {
  std::size_t rank = 0;
  double identity_coeff = 0;
  double projector_coeff = 0;
  std::complex<double> excitation_coeff;
  std::size_t projector_multiplicity = 0;
  std::size_t excitation_multiplicity = 0;
  double s_one_norm = 0;
};

LcuCoefficients lcu_coefficients(std::size_t rank, double theta);

/// |alpha| per ancilla code: code 0 is the identity, codes 1..D-1 the
/// projector terms, codes D..2D-1 the excitation terms.
std::vector<double> code_weights(const LcuCoefficients& coeffs);

/// sqrt(|alpha_c| / s) per code.
Eigen::VectorXd target_amplitudes(std::size_t rank, double theta);

/// Closed-form rotation angles Theta_1..Theta_{2n} (index 0 holds Theta_1).
/// Throws DomainError when an arcsin argument leaves [-1, 1].
std::vector<double> prepare_angles(std::size_t rank, double theta);

/// Gate angles (R = exp(-i a P / 2)) that load sqrt(|alpha_c| / s) with the
/// same level structure.
std::vector<double> verified_prepare_angles(std::size_t rank, double theta);

enum class PrepareMode { verified, closed_form };
enum class RotationConvention {
  half_angle,  // R_P(a) = exp(-i a P / 2)
  full_angle,  // R_P(a) = exp(-i a P)
};

struct PrepareOptions {
  PrepareMode mode = PrepareMode::verified;
  RotationConvention convention = RotationConvention::half_angle;
};

/// Hierarchical ancilla-bank loader on 2n qubits: RX on the sector qubit,
/// then for each level k = 2..2n a broadcast Hadamard onto qubits k..2n
/// (controlled by qubit k-1, anticontrolled by 1..k-2) followed by RY on
/// qubit k anticontrolled by 1..k-1 (qubits 1-indexed here).
Circuit synth_prepare(std::size_t rank, double theta, const PrepareOptions& opts = {});

/// Binary-tree amplitude loading of nonnegative `magnitudes` (length 2^m)
/// with uniformly controlled RY rotations.
Circuit synth_state_loader(const Eigen::VectorXd& magnitudes);

struct PrepareReport {
  double max_deviation = 0;  // structured circuit
  std::optional<double> fallback_deviation;
  bool used_fallback = false;
};

struct CheckedPrepare {
  Circuit circuit;
  PrepareReport report;
};

/// Synthesizes, compares |amplitudes| against sqrt(|alpha|/s), and swaps in
/// the generic loader when the deviation exceeds `tolerance`.
CheckedPrepare prepare_checked(std::size_t rank, double theta, double tolerance,
                               const PrepareOptions& opts = {});

PrepareReport verify_prepare(std::size_t rank, double theta, double tolerance,
                             const PrepareOptions& opts = {});

}  // namespace lcu_ucc
