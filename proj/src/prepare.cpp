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

#include "lcu_ucc/prepare.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lcu_ucc {

namespace {

std::size_t half_codes(std::size_t rank) { return std::size_t{1} << (2 * rank - 1); }

void require_rank(std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("rank must be at least 1");
  if (2 * rank > 30) throw std::invalid_argument("rank too large for an ancilla code");
}

double checked_asin(double arg, std::size_t k, std::size_t rank, double theta) {
  if (!(arg >= -1.0 && arg <= 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "arcsin argument " << arg << " outside [-1, 1] for Theta_" << k
       << " (rank " << rank << ", theta " << theta << ")";
    throw DomainError(os.str());
  }
  return std::asin(arg);
}

}  // namespace

LcuCoefficients lcu_coefficients(std::size_t rank, double theta) {
  require_rank(rank);
  const double d = static_cast<double>(half_codes(rank));
  const double cm1 = std::cos(theta) - 1.0;
  LcuCoefficients c;
  c.rank = rank;
  c.identity_coeff = 1.0 + cm1 / d;
  c.projector_coeff = cm1 / d;
  c.excitation_coeff = {0.0, std::sin(theta) / d};
  c.projector_multiplicity = half_codes(rank) - 1;
  c.excitation_multiplicity = half_codes(rank);
  c.s_one_norm = std::abs(c.identity_coeff) +
                 static_cast<double>(c.projector_multiplicity) * std::abs(c.projector_coeff) +
                 static_cast<double>(c.excitation_multiplicity) * std::abs(c.excitation_coeff);
  return c;
}

std::vector<double> code_weights(const LcuCoefficients& coeffs) {
  const std::size_t d = half_codes(coeffs.rank);
  std::vector<double> w(2 * d);
  w[0] = std::abs(coeffs.identity_coeff);
  for (std::size_t c = 1; c < d; ++c) w[c] = std::abs(coeffs.projector_coeff);
  for (std::size_t c = d; c < 2 * d; ++c) w[c] = std::abs(coeffs.excitation_coeff);
  return w;
}

Eigen::VectorXd target_amplitudes(std::size_t rank, double theta) {
  const LcuCoefficients coeffs = lcu_coefficients(rank, theta);
  const auto w = code_weights(coeffs);
  Eigen::VectorXd out(static_cast<Eigen::Index>(w.size()));
  for (std::size_t c = 0; c < w.size(); ++c) {
    out[static_cast<Eigen::Index>(c)] = std::sqrt(w[c] / coeffs.s_one_norm);
  }
  return out;
}

std::vector<double> prepare_angles(std::size_t rank, double theta) {
  require_rank(rank);
  const double d = static_cast<double>(half_codes(rank));
  const double c = std::cos(theta);
  std::vector<double> out(2 * rank);
  out[0] = checked_asin(-std::sin(theta) / std::sqrt(d), 1, rank, theta);
  for (std::size_t k = 2; k <= 2 * rank; ++k) {
    const double pk = std::ldexp(1.0, static_cast<int>(k));
    const double radicand = std::ldexp(1.0, static_cast<int>(2 * rank - 2 + k)) - pk +
                            2.0 + 2.0 * c * c + (pk - 4.0) * c;
    out[k - 1] = checked_asin((c - 1.0) / std::sqrt(radicand), k, rank, theta);
  }
  return out;
}

std::vector<double> verified_prepare_angles(std::size_t rank, double theta) {
  const LcuCoefficients coeffs = lcu_coefficients(rank, theta);
  const double s = coeffs.s_one_norm;
  const double p_xy = static_cast<double>(coeffs.excitation_multiplicity) *
                      std::abs(coeffs.excitation_coeff) / s;
  const double p_id = std::abs(coeffs.identity_coeff) / s;
  const double p_rest = std::abs(coeffs.projector_coeff) / s;

  std::vector<double> out(2 * rank);
  out[0] = 2.0 * std::asin(std::sqrt(std::min(1.0, p_xy)));
  for (std::size_t k = 2; k <= 2 * rank; ++k) {
    // Mass still on the all-zero prefix of length k-1, and the share that
    // level k moves onto prefix 0..01 (2^{2n-k} codes).
    const double branch = std::ldexp(1.0, static_cast<int>(2 * rank - k));
    const double remaining = p_id + (2.0 * branch - 1.0) * p_rest;
    const double moved = branch * p_rest;
    out[k - 1] = remaining > 0 ? 2.0 * std::asin(std::sqrt(std::min(1.0, moved / remaining)))
                               : 0.0;
  }
  return out;
}

Circuit synth_prepare(std::size_t rank, double theta, const PrepareOptions& opts) {
  require_rank(rank);
  std::vector<double> angles;
  if (opts.mode == PrepareMode::verified) {
    angles = verified_prepare_angles(rank, theta);
  } else {
    angles = prepare_angles(rank, theta);
    if (opts.convention == RotationConvention::full_angle) {
      for (auto& a : angles) a *= 2.0;
    }
  }

  const std::size_t width = 2 * rank;
  Circuit c(width, {0, width}, {0, 0});
  c.add(make_gate(GateKind::RX, 0, angles[0]));
  for (std::size_t level = 1; level < width; ++level) {
    std::vector<Control> h_controls;
    for (std::size_t q = 0; q + 1 < level; ++q) h_controls.push_back({q, Polarity::negative});
    h_controls.push_back({level - 1, Polarity::positive});
    for (std::size_t t = level; t < width; ++t) {
      c.add(make_gate(GateKind::H, t, 0.0, h_controls));
    }
    std::vector<Control> ry_controls;
    for (std::size_t q = 0; q < level; ++q) ry_controls.push_back({q, Polarity::negative});
    c.add(make_gate(GateKind::RY, level, angles[level], ry_controls));
  }
  return c;
}

Circuit synth_state_loader(const Eigen::VectorXd& magnitudes) {
  const auto dim = static_cast<std::size_t>(magnitudes.size());
  std::size_t width = 0;
  while ((std::size_t{1} << width) < dim) ++width;
  if ((std::size_t{1} << width) != dim || width == 0) {
    throw DimensionError("state loader needs a power-of-two length of at least 2");
  }
  const Eigen::VectorXd probs = magnitudes.array().square();

  Circuit c(width, {0, width}, {0, 0});
  for (std::size_t level = 0; level < width; ++level) {
    const std::size_t block = dim >> level;  // codes sharing a prefix
    for (std::size_t prefix = 0; prefix < (std::size_t{1} << level); ++prefix) {
      const auto start = static_cast<Eigen::Index>(prefix * block);
      const auto half = static_cast<Eigen::Index>(block / 2);
      const double p0 = probs.segment(start, half).sum();
      const double p1 = probs.segment(start + half, half).sum();
      if (p1 <= 0.0) continue;
      std::vector<Control> controls;
      for (std::size_t q = 0; q < level; ++q) {
        const bool bit = (prefix >> (level - 1 - q)) & 1u;
        controls.push_back({q, bit ? Polarity::positive : Polarity::negative});
      }
      c.add(make_gate(GateKind::RY, level, 2.0 * std::atan2(std::sqrt(p1), std::sqrt(p0)),
                      std::move(controls)));
    }
  }
  return c;
}

namespace {

double amplitude_deviation(const Circuit& c, const Eigen::VectorXd& target) {
  const Statevector out = apply_circuit(c, basis_state(c.num_qubits(), 0));
  return (out.cwiseAbs() - target).cwiseAbs().maxCoeff();
}

}  // namespace

CheckedPrepare prepare_checked(std::size_t rank, double theta, double tolerance,
                               const PrepareOptions& opts) {
  const Eigen::VectorXd target = target_amplitudes(rank, theta);
  CheckedPrepare out{synth_prepare(rank, theta, opts), {}};
  out.report.max_deviation = amplitude_deviation(out.circuit, target);
  if (out.report.max_deviation > tolerance) {
    Circuit fallback = synth_state_loader(target);
    const double dev = amplitude_deviation(fallback, target);
    if (!(dev <= tolerance)) {
      throw std::logic_error("generic state loader missed its target by " +
                             std::to_string(dev));
    }
    out.report.fallback_deviation = dev;
    out.report.used_fallback = true;
    out.circuit = std::move(fallback);
  }
  return out;
}

PrepareReport verify_prepare(std::size_t rank, double theta, double tolerance,
                             const PrepareOptions& opts) {
  return prepare_checked(rank, theta, tolerance, opts).report;
}

}  // namespace lcu_ucc
