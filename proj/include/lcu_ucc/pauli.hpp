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

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcu_ucc/dense.hpp"
#include "lcu_ucc/errors.hpp"

namespace lcu_ucc {

/// An n-qubit Pauli word i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Letters are stored symplectically: bit q of the x-mask and z-mask encode
/// the letter on qubit q as I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). Qubit 0 is
/// rendered leftmost and is the most significant bit of dense basis indices.
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliString() = default;
  explicit PauliString(std::size_t num_qubits);
  PauliString(std::size_t num_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
              int phase_power = 0);

  /// Parses a word such as "XZIY"; qubit 0 is the first character.
  static PauliString from_letters(std::string_view letters, int phase_power = 0);
  /// One non-identity letter on `qubit`.
  static PauliString single(std::size_t num_qubits, std::size_t qubit, char letter);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  int phase_power() const noexcept { return phase_; }
  std::complex<double> phase() const noexcept;

  char letter(std::size_t qubit) const;
  std::string letters() const;
  /// Rendering used by the CLI, e.g. "i^1 · XZIY".
  std::string to_string() const;

  std::size_t weight() const noexcept { return std::popcount(x_ | z_); }
  bool is_identity() const noexcept { return (x_ | z_) == 0; }
  bool is_diagonal() const noexcept { return x_ == 0; }

  PauliString without_phase() const { return {num_qubits_, x_, z_, 0}; }
  PauliString with_phase(int phase_power) const {
    return {num_qubits_, x_, z_, phase_power};
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/// Exact product a*b including the accumulated i^k.
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

/// True iff ab == ba.
bool commutes(const PauliString& a, const PauliString& b);

/// Strict weak order on letters only: qubit 0 first, I < X < Y < Z.
bool letters_less(const PauliString& a, const PauliString& b);

/// XY-sector strings carry at least one X or Y; the rest are I/Z only.
inline bool is_xy_sector(const PauliString& s) { return s.x_mask() != 0; }

struct LettersLess {
  bool operator()(const PauliString& a, const PauliString& b) const {
    return letters_less(a, b);
  }
};

/// Complex-weighted sum of phase-free Pauli strings.
class PauliSum {
 public:
  using Map = std::map<PauliString, std::complex<double>, LettersLess>;

  PauliSum() = default;
  explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}
  PauliSum(const PauliString& s, std::complex<double> coeff = 1.0);

  static PauliSum identity(std::size_t num_qubits, std::complex<double> coeff = 1.0);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const Map& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Adds coeff * s; the phase of `s` is folded into the coefficient.
  void add_term(const PauliString& s, std::complex<double> coeff = 1.0);
  /// Coefficient of the phase-free letters of `s` (0 when absent).
  std::complex<double> coefficient(const PauliString& s) const;

  /// Copy with every |coefficient| <= tol removed.
  PauliSum pruned(double tol = 0.0) const;
  PauliSum adjoint() const;

  /// Terms sorted by sector (I/Z strings first) then by letters.
  std::vector<std::pair<PauliString, std::complex<double>>> ordered_terms() const;

  PauliSum& operator+=(const PauliSum& rhs);
  PauliSum& operator-=(const PauliSum& rhs);
  PauliSum& operator*=(std::complex<double> scale);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, std::complex<double> s) { return a *= s; }
  friend PauliSum operator*(std::complex<double> s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

 private:
  void check_width(std::size_t n) const;

  std::size_t num_qubits_ = 0;
  Map terms_;
};

namespace detail {
// Maps a qubit mask onto basis-index bits (qubit 0 is the MSB).
inline std::uint64_t index_bits(std::uint64_t mask, std::size_t num_qubits) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((mask >> q) & 1u) out |= std::uint64_t{1} << (num_qubits - 1 - q);
  }
  return out;
}

inline void check_cap(std::size_t num_qubits, std::size_t cap) {
  if (num_qubits > cap) {
    throw ResourceError("dense realization of " + std::to_string(num_qubits) +
                        " qubits exceeds cap of " + std::to_string(cap));
  }
}

template <typename Real>
void accumulate_dense(DenseOperatorT<Real>& out, const PauliString& s,
                      std::complex<Real> coeff) {
  const std::size_t n = s.num_qubits();
  const std::uint64_t xb = index_bits(s.x_mask(), n);
  const std::uint64_t zb = index_bits(s.z_mask(), n);
  const int k = (s.phase_power() + std::popcount(s.x_mask() & s.z_mask())) & 3;
  static constexpr std::complex<Real> kPow[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<Real> base = coeff * kPow[k];
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t col = 0; col < dim; ++col) {
    const bool odd = std::popcount(zb & col) & 1;
    out(static_cast<Eigen::Index>(col ^ xb), static_cast<Eigen::Index>(col)) +=
        odd ? -base : base;
  }
}
}  // namespace detail

/// Dense 2^n x 2^n matrix of a single string (phase included).
template <typename Real = double>
DenseOperatorT<Real> to_dense(const PauliString& s,
                              std::size_t cap = kDefaultQubitCap) {
  detail::check_cap(s.num_qubits(), cap);
  const auto dim = static_cast<Eigen::Index>(dimension_of(s.num_qubits()));
  DenseOperatorT<Real> out = DenseOperatorT<Real>::Zero(dim, dim);
  detail::accumulate_dense<Real>(out, s, std::complex<Real>(1));
  return out;
}

/// Dense matrix of sum_P c_P P on `num_qubits` qubits.
template <typename Real = double>
DenseOperatorT<Real> to_dense(const PauliSum& sum, std::size_t num_qubits,
                              std::size_t cap = kDefaultQubitCap) {
  detail::check_cap(num_qubits, cap);
  if (!sum.empty() && sum.num_qubits() != num_qubits) {
    throw DimensionError("PauliSum width " + std::to_string(sum.num_qubits()) +
                         " does not match " + std::to_string(num_qubits));
  }
  const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
  DenseOperatorT<Real> out = DenseOperatorT<Real>::Zero(dim, dim);
  for (const auto& [s, c] : sum) {
    detail::accumulate_dense<Real>(
        out, s, std::complex<Real>(static_cast<Real>(c.real()),
                                   static_cast<Real>(c.imag())));
  }
  return out;
}

}  // namespace lcu_ucc
