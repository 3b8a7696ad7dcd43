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

#include "lcu_ucc/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace lcu_ucc {

namespace {

std::uint64_t width_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_width(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("Pauli strings on " + std::to_string(a.num_qubits()) +
                         " and " + std::to_string(b.num_qubits()) + " qubits");
  }
}

int letter_rank(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
  }
  return -1;
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits) : PauliString(num_qubits, 0, 0, 0) {}

PauliString::PauliString(std::size_t num_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask, int phase_power)
    : num_qubits_(num_qubits), x_(x_mask), z_(z_mask), phase_(phase_power & 3) {
  if (num_qubits > kMaxQubits) {
    throw DimensionError("Pauli strings support at most 64 qubits");
  }
  if (((x_ | z_) & ~width_mask(num_qubits)) != 0) {
    throw DimensionError("Pauli masks exceed the qubit count");
  }
}

PauliString PauliString::from_letters(std::string_view letters, int phase_power) {
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (letters[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                    letters[q] + "'");
    }
  }
  return {letters.size(), x, z, phase_power};
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit,
                                char letter) {
  if (qubit >= num_qubits) throw DimensionError("qubit index out of range");
  std::string word(num_qubits, 'I');
  word[qubit] = letter;
  return from_letters(word);
}

std::complex<double> PauliString::phase() const noexcept {
  static constexpr std::complex<double> kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPow[phase_];
}

char PauliString::letter(std::size_t qubit) const {
  if (qubit >= num_qubits_) throw DimensionError("qubit index out of range");
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::string PauliString::letters() const {
  std::string out(num_qubits_, 'I');
  for (std::size_t q = 0; q < num_qubits_; ++q) out[q] = letter(q);
  return out;
}

std::string PauliString::to_string() const {
  return "i^" + std::to_string(phase_) + " · " + letters();
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_width(a, b);
  // Each letter is i^{xz} X^x Z^z. Moving Z^{z1} past X^{x2} costs (-1)^{z1 x2},
  // and the product letter re-absorbs i^{x3 z3}.
  const std::uint64_t x3 = a.x_mask() ^ b.x_mask();
  const std::uint64_t z3 = a.z_mask() ^ b.z_mask();
  const int k = a.phase_power() + b.phase_power() +
                std::popcount(a.x_mask() & a.z_mask()) +
                std::popcount(b.x_mask() & b.z_mask()) +
                2 * std::popcount(a.z_mask() & b.x_mask()) -
                std::popcount(x3 & z3);
  return {a.num_qubits(), x3, z3, ((k % 4) + 4) % 4};
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_width(a, b);
  const int anti = std::popcount(a.x_mask() & b.z_mask()) +
                   std::popcount(a.z_mask() & b.x_mask());
  return (anti & 1) == 0;
}

bool letters_less(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) return a.num_qubits() < b.num_qubits();
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    const int ra = letter_rank(a.letter(q));
    const int rb = letter_rank(b.letter(q));
    if (ra != rb) return ra < rb;
  }
  return false;
}

PauliSum::PauliSum(const PauliString& s, std::complex<double> coeff)
    : num_qubits_(s.num_qubits()) {
  add_term(s, coeff);
}

PauliSum PauliSum::identity(std::size_t num_qubits, std::complex<double> coeff) {
  return PauliSum(PauliString(num_qubits), coeff);
}

void PauliSum::check_width(std::size_t n) const {
  if (n != num_qubits_) {
    throw DimensionError("PauliSum on " + std::to_string(num_qubits_) +
                         " qubits combined with width " + std::to_string(n));
  }
}

void PauliSum::add_term(const PauliString& s, std::complex<double> coeff) {
  check_width(s.num_qubits());
  terms_[s.without_phase()] += coeff * s.phase();
}

std::complex<double> PauliSum::coefficient(const PauliString& s) const {
  const auto it = terms_.find(s.without_phase());
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

PauliSum PauliSum::pruned(double tol) const {
  PauliSum out(num_qubits_);
  for (const auto& [s, c] : terms_) {
    if (std::abs(c) > tol) out.terms_.emplace(s, c);
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  // Phase-free strings are Hermitian.
  PauliSum out(num_qubits_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, std::conj(c));
  return out;
}

std::vector<std::pair<PauliString, std::complex<double>>> PauliSum::ordered_terms()
    const {
  std::vector<std::pair<PauliString, std::complex<double>>> out(terms_.begin(),
                                                                terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return !is_xy_sector(a.first) && is_xy_sector(b.first);
  });
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
  if (empty() && num_qubits_ == 0) num_qubits_ = rhs.num_qubits_;
  check_width(rhs.num_qubits_);
  for (const auto& [s, c] : rhs.terms_) terms_[s] += c;
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& rhs) {
  if (empty() && num_qubits_ == 0) num_qubits_ = rhs.num_qubits_;
  check_width(rhs.num_qubits_);
  for (const auto& [s, c] : rhs.terms_) terms_[s] -= c;
  return *this;
}

PauliSum& PauliSum::operator*=(std::complex<double> scale) {
  for (auto& [s, c] : terms_) c *= scale;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits_ != b.num_qubits_) {
    throw DimensionError("PauliSum product of mismatched widths");
  }
  PauliSum out(a.num_qubits_);
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) out.add_term(sa * sb, ca * cb);
  }
  return out;
}

}  // namespace lcu_ucc
