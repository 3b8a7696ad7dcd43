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

#include "lcu_ucc/cost.hpp"

#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lcu_ucc/errors.hpp"

namespace lcu_ucc {

namespace {

void check_rank(std::size_t n) {
  if (n < 1) throw DomainError("rank must be at least 1");
  if (n > 30) throw ResourceError("rank above 30 overflows the 64-bit count model");
}

std::uint64_t rho_sum(std::size_t n, const std::vector<std::uint64_t>& rho) {
  if (rho.size() != 2 * n - 2) {
    throw DimensionError("rho must have 2n - 2 = " + std::to_string(2 * n - 2) +
                         " entries, got " + std::to_string(rho.size()));
  }
  return std::accumulate(rho.begin(), rho.end(), std::uint64_t{0});
}

}  // namespace

std::uint64_t prepare_cnot_closed_form(std::size_t n) {
  check_rank(n);
  const auto m = static_cast<std::int64_t>(n);
  const std::int64_t num = 2 * (32 * m * m * m - 24 * m * m - 41 * m + 36);
  if (num % 3 != 0) throw std::logic_error("prepare closed form is not integral");
  return static_cast<std::uint64_t>(num / 3);
}

std::uint64_t prepare_cnot_count(std::size_t n) {
  check_rank(n);
  std::uint64_t sum = 2 * n;
  for (std::uint64_t k = 2; k + 1 <= 2 * n; ++k) {
    sum += 2 * (8 * k - 12) * (2 * n + 1 - k);
  }
  if (sum != prepare_cnot_closed_form(n)) {
    throw std::logic_error("prepare count: sum form and closed form disagree");
  }
  return sum;
}

SelectCounts select_cnot_counts(std::size_t n, const std::vector<std::uint64_t>& rho) {
  check_rank(n);
  const std::uint64_t r = rho_sum(n, rho);
  return {4 * n - 2, 4 * n + r};
}

std::uint64_t total_lcu_closed_form(std::size_t n, const std::vector<std::uint64_t>& rho) {
  check_rank(n);
  const auto m = static_cast<std::int64_t>(n);
  const std::int64_t base = 128 * m * m * m - 96 * m * m - 140 * m + 138;
  return static_cast<std::uint64_t>(base) + 3 * rho_sum(n, rho);
}

std::uint64_t total_lcu_count(std::size_t n, const std::vector<std::uint64_t>& rho) {
  const SelectCounts s = select_cnot_counts(n, rho);
  const std::uint64_t total = 6 * prepare_cnot_count(n) + 3 * (s.steps + s.init);
  if (total != total_lcu_closed_form(n, rho)) {
    throw std::logic_error("total count: sum form and closed form disagree");
  }
  return total;
}

std::uint64_t cascade_count(std::size_t n, const std::vector<std::uint64_t>& rho) {
  check_rank(n);
  return (std::uint64_t{1} << (2 * n)) * (2 * n - 1 + rho_sum(n, rho));
}

CostReport cost_report(std::size_t n, const std::vector<std::uint64_t>& rho) {
  CostReport r;
  r.rank = n;
  r.rho = rho;
  r.prepare_cnots = prepare_cnot_count(n);
  const SelectCounts s = select_cnot_counts(n, rho);
  r.select_cnots = s.steps;
  r.reference_init_cnots = s.init;
  r.total_cnots = total_lcu_count(n, rho);
  r.cascade_cnots = cascade_count(n, rho);
  return r;
}

std::vector<std::uint64_t> uniform_rho(std::size_t n, std::uint64_t fill) {
  check_rank(n);
  return std::vector<std::uint64_t>(2 * n - 2, fill);
}

Circuit synth_cascade(const UccFactor& f) {
  const std::size_t nq = f.num_qubits();
  Circuit c(nq);
  const PauliSum k = excitation_pauli_sum(f);
  for (const auto& [s, coeff] : k.ordered_terms()) {
    // coeff = i kappa, exp(theta i kappa P) = RZ-type rotation by -2 theta kappa.
    const double angle = -2.0 * f.theta() * coeff.imag();
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < nq; ++q) {
      if (s.letter(q) != 'I') support.push_back(q);
    }
    if (support.empty()) continue;

    auto basis_in = [&](bool forward) {
      for (std::size_t q : support) {
        const char l = s.letter(q);
        if (l == 'X') c.add(make_gate(GateKind::H, q));
        if (l == 'Y') c.add(make_gate(GateKind::RX, q, forward ? std::numbers::pi / 2
                                                                 : -std::numbers::pi / 2));
      }
    };
    basis_in(true);
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
      c.add(make_gate(GateKind::X, support[i + 1], 0.0, {{support[i], Polarity::positive}}));
    }
    c.add(make_gate(GateKind::RZ, support.back(), angle));
    for (std::size_t i = support.size() - 1; i > 0; --i) {
      c.add(make_gate(GateKind::X, support[i], 0.0, {{support[i - 1], Polarity::positive}}));
    }
    basis_in(false);
  }
  return c;
}

std::string emit_comparison(std::size_t n_max, std::uint64_t rho_fill) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::ostringstream out;
  out << "rank,cascade,lcu_total,prepare,select_total\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto rho = uniform_rho(n, rho_fill);
    const SelectCounts s = select_cnot_counts(n, rho);
    out << n << ',' << cascade_count(n, rho) << ',' << total_lcu_count(n, rho) << ','
        << prepare_cnot_count(n) << ',' << (s.steps + s.init) << '\n';
  }
  return out.str();
}

}  // namespace lcu_ucc
