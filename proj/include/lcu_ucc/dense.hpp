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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>

namespace lcu_ucc {

template <typename Real>
using DenseOperatorT =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using StatevectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using DenseOperator = DenseOperatorT<double>;
using Statevector = StatevectorT<double>;
using cplx = std::complex<double>;

// Largest register realized densely unless the caller raises it.
inline constexpr std::size_t kDefaultQubitCap = 14;

inline std::size_t dimension_of(std::size_t num_qubits) {
  return std::size_t{1} << num_qubits;
}

/// Induced 1-norm (max column sum of moduli).
template <typename Derived>
typename Derived::RealScalar one_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

/// Spectral norm via singular values.
template <typename Derived>
typename Derived::RealScalar spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  using Plain = typename Derived::PlainObject;
  if (m.rows() <= 16 && m.cols() <= 16) return Eigen::JacobiSVD<Plain>(m.eval()).singularValues()(0);
  return Eigen::BDCSVD<Plain>(m.eval()).singularValues()(0);
}

/// Matrix exponential by scaling and squaring with a degree-20 Taylor
/// polynomial. The argument is scaled until its 1-norm is at most 0.5.
template <typename Derived>
typename Derived::PlainObject matrix_exp(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  using Real = typename Derived::RealScalar;
  constexpr int kDegree = 20;
  constexpr Real kThreshold = Real(0.5);

  const Real norm = one_norm(m);
  int squarings = 0;
  if (norm > kThreshold) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kThreshold)));
  }
  const Plain a = m / std::ldexp(Real(1), squarings);
  const Plain id = Plain::Identity(m.rows(), m.cols());

  // Horner: I + A(I + A/2(I + A/3(...)))
  Plain result = id;
  for (int k = kDegree; k >= 1; --k) {
    result = id + (a * result) / Real(k);
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

/// ||U^dagger U - I|| in spectral norm.
template <typename Derived>
typename Derived::RealScalar unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  return spectral_norm((u.adjoint() * u - Plain::Identity(u.cols(), u.cols())).eval());
}

template <typename Real>
struct PhaseAlignment {
  Real deviation;  // min over phi of ||e^{i phi} M - U||_2
  Real phase;      // the phi used
};

/// Aligns the global phase of `m` to `u` (Frobenius-optimal angle) and reports
/// the spectral-norm distance after alignment.
template <typename DerivedM, typename DerivedU>
PhaseAlignment<typename DerivedM::RealScalar> phase_aligned_distance(
    const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedU>& u) {
  using Real = typename DerivedM::RealScalar;
  const std::complex<Real> overlap = (u.adjoint() * m).trace();
  Real phi = 0;
  if (std::abs(overlap) > Real(0)) phi = -std::arg(overlap);
  const auto rotated = (std::polar(Real(1), phi) * m - u).eval();
  return {spectral_norm(rotated), phi};
}

}  // namespace lcu_ucc
