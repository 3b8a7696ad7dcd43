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
#include <optional>
#include <string>

#include "lcu_ucc/circuit.hpp"
#include "lcu_ucc/fermion.hpp"
#include "lcu_ucc/prepare.hpp"
#include "lcu_ucc/select.hpp"

namespace lcu_ucc {

struct LcuOptions {
  PrepareOptions prepare;
  double prepare_tolerance = 1e-9;
};

/// W = (B^dag (x) 1) SELECT (B (x) 1). `prep` acts on the leading ancilla
/// qubits of `select`.
Circuit assemble_w(const Circuit& prep, const Circuit& select);

/// Unpadded block encoding of one factor.
struct BlockEncoding {
  Circuit w;
  SelectPlan plan;
  PrepareReport prepare_report;
  double s_one_norm = 0;
  std::size_t num_ancilla = 0;
};

BlockEncoding build_block_encoding(const UccFactor& f, const LcuOptions& opts = {});

/// <0|C|0> on the system register, from the 2^N ancilla-zero columns.
struct SystemBlock {
  DenseOperator block;
  double leakage = 0;  // max over inputs of the norm left on nonzero ancilla codes
};

SystemBlock system_block(const Circuit& c, std::size_t num_ancilla);

struct Postselected {
  Statevector state;
  double success_probability = 0;
};

/// Applies `w` to |0>_anc (x) psi, projects the ancilla on |0> and
/// renormalizes. Throws ProjectionError when nothing survives.
Postselected apply_postselected(const Circuit& w, std::size_t num_ancilla,
                                const Statevector& psi);

/// 1 / sin(pi / (2 (2m + 1))): the one-norms that m rounds amplify exactly.
double exact_amplification_norm(std::size_t rounds);

/// Smallest m whose exact-amplification norm reaches `s`.
std::size_t rounds_for_norm(double s);

/// Padded W plus m rounds of oblivious amplitude amplification.
struct LcuAssembly {
  Circuit circuit;  // (-1)^m (W R W^dag R)^m W
  Circuit w;
  SelectPlan plan;
  PrepareReport prepare_report;
  double s_one_norm = 0;
  double s_effective = 0;
  double pad_coefficient = 0;
  std::size_t pad_qubits = 0;
  std::size_t rounds = 0;
  std::size_t num_ancilla = 0;  // 2n + pad
};

/// Pads the one-norm up to the exact-amplification value s_m with the pair
/// +c I, -c I on one extra ancilla, then emits the m-round circuit with
/// R = 1 - 2|0><0| on all ancillas.
LcuAssembly pad_and_synth_oaa(const UccFactor& f, const LcuOptions& opts = {},
                              std::optional<std::size_t> target_rounds = std::nullopt);

enum class VerifyMode { postselect, oaa };

struct EndToEndReport {
  double theta = 0;
  double deviation = 0;
  double s = 0;             // term-wise one-norm
  double s_effective = 0;   // after padding (oaa) or s (postselect)
  double s_estimate = 0;    // sqrt(dim / tr(M^dag M)) of the raw block
  std::size_t rounds = 0;
  double leakage = 0;
  double success_probability = 0;
  double phase = 0;
  bool prepare_fallback = false;
  bool pass = false;
};

/// Compares the encoded system operator with exact_unitary after global
/// phase alignment. In postselect mode the block is rescaled by s.
EndToEndReport verify_end_to_end(const UccFactor& f, VerifyMode mode, double tolerance,
                                 const LcuOptions& opts = {});

}  // namespace lcu_ucc
