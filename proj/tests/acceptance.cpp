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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Thresholds are the contract values; nothing is relaxed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcu_ucc/cost.hpp"
#include "lcu_ucc/lcu.hpp"
#include "oracles.hpp"

namespace {

using namespace lcu_ucc;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
const std::vector<double> kGrid = {-0.3, 0.3, kPi / 4, 1.0, kPi / 2, 2.5};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

UccFactor rank_factor(std::size_t n, double theta) {
  std::vector<std::size_t> occ(n), virt(n);
  for (std::size_t i = 0; i < n; ++i) {
    occ[i] = i;
    virt[i] = n + i;
  }
  return {occ, virt, theta, 2 * n};
}

std::vector<UccFactor> block_factors() {
  return {UccFactor({0}, {1}, 0.0, 2), UccFactor({0}, {2}, 0.0, 4),
          UccFactor({0, 1}, {2, 3}, 0.0, 4), UccFactor({0, 1}, {4, 6}, 0.0, 7)};
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (double th : kGrid) {
      const UccFactor f = rank_factor(n, th);
      const DenseOperator diff = to_dense(ucc_factor_expand(f), f.num_qubits()) - exact_unitary(f);
      worst = std::max(worst, spectral_norm(diff));
    }
  }
  const double secs = seconds_since(t0);
  o.detail << "max ||expand - exp||_2 = " << sci(worst) << " (tol 1e-10), runtime " << secs
           << " s (limit 30 s)";
  o.require(worst <= 1e-10, "deviation");
  o.require(secs < 30, "runtime");
  return o;
}

Outcome criterion2() {
  Outcome o;
  double cube_literal = 0, cube_signed = 0, square = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const UccFactor f = rank_factor(n, 0.0);
    const DenseOperator k = to_dense(excitation_pauli_sum(f), f.num_qubits());
    const DenseOperator p = to_dense(projector_pauli_sum(f), f.num_qubits());
    const DenseOperator k3 = k * k * k;
    cube_literal = std::max(cube_literal, spectral_norm((k3 - k).eval()));
    cube_signed = std::max(cube_signed, spectral_norm((k3 + k).eval()));
    square = std::max(square, spectral_norm((k * k + p).eval()));
  }
  o.detail << "||K^3 - K|| = " << sci(cube_literal) << " (stated identity, tol 1e-12); "
           << "||K^3 + K|| = " << sci(cube_signed) << "; ||K^2 + (AA^dag + A^dag A)|| = "
           << sci(square);
  o.require(cube_literal <= 1e-12, "K^3 = K does not hold; K^3 = -K does");
  o.require(square <= 1e-12, "square identity");
  return o;
}

Outcome criterion3() {
  Outcome o;
  int xy_match = 0, xy_flip = 0, iz_match = 0, iz_flip = 0;
  double worst = 0;
  for (double th : kGrid) {
    const PauliSum e = ucc_factor_expand(UccFactor({0, 1}, {2, 3}, th, 4));
    std::set<std::string> expected = {"IIII"};
    const double cm1 = std::cos(th) - 1, sn = std::sin(th);
    for (const auto& [s, sign] : testing::reference_rank2_xy()) {
      expected.insert(s);
      const cplx c = e.coefficient(PauliString::from_letters(s));
      worst = std::max(worst, std::abs(std::abs(c) - std::abs(sn) / 8));
      const cplx ref(0, sign * sn / 8);
      if (std::abs(sn) > 1e-9) (std::abs(c - ref) < 1e-12 ? xy_match : xy_flip)++;
    }
    for (const auto& [s, sign] : testing::reference_rank2_iz()) {
      expected.insert(s);
      const cplx c = e.coefficient(PauliString::from_letters(s));
      worst = std::max(worst, std::abs(std::abs(c) - std::abs(cm1) / 8));
      (std::abs(c - sign * cm1 / 8) < 1e-12 ? iz_match : iz_flip)++;
    }
    const cplx id = e.coefficient(PauliString(4));
    worst = std::max(worst, std::abs(std::abs(id) - std::abs(1 + cm1 / 8)));
    std::set<std::string> got;
    for (const auto& [s, c] : e) got.insert(s.letters());
    o.require(got == expected, "string set");
  }
  o.detail << "16-string set and magnitudes, max |magnitude error| = " << sci(worst)
           << "; signs vs reference list: IZ " << iz_match << " match / " << iz_flip
           << " flipped, XY " << xy_match << " match / " << xy_flip
           << " flipped (ordering a^dag_3 a^dag_2 a_0 a_1 = -a^dag_i a^dag_j a_k a_l)";
  o.require(worst <= 1e-12, "magnitudes");
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0;
  std::size_t codes = 0;
  for (const auto& f0 : block_factors()) {
    for (double th : kGrid) {
      const UccFactor f = f0.with_theta(th);
      const SelectPlan plan = derive_select_plan(f);
      const SelectReport r = verify_select(f, plan, synth_select(f, plan), 1e-10);
      worst = std::max(worst, r.max_deviation);
      codes += r.codes_checked;
      o.require(r.pass, f.describe());
    }
  }
  o.detail << codes << " codes over n=1,2 adjacent/gapped, max deviation " << sci(worst)
           << " (tol 1e-10)";
  o.require(worst <= 1e-10, "deviation");
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst = 0, worst_prob = 0;
  for (const auto& f0 : block_factors()) {
    for (double th : kGrid) {
      const UccFactor f = f0.with_theta(th);
      const EndToEndReport r = verify_end_to_end(f, VerifyMode::postselect, 1e-8);
      worst = std::max(worst, r.deviation);
      worst_prob = std::max(worst_prob, std::abs(r.success_probability - 1 / (r.s * r.s)));
      // Per-state probability through the postselection path.
      const BlockEncoding be = build_block_encoding(f);
      for (std::size_t j : {std::size_t{0}, (std::size_t{1} << f.num_qubits()) - 1}) {
        const Postselected p = apply_postselected(be.w, be.num_ancilla, basis_state(f.num_qubits(), j));
        worst_prob = std::max(worst_prob, std::abs(p.success_probability - 1 / (r.s * r.s)));
      }
    }
  }
  const UccFactor spot({0, 1}, {2, 3}, kPi / 2, 4);
  const BlockEncoding be = build_block_encoding(spot);
  const Postselected p = apply_postselected(be.w, be.num_ancilla, basis_state(4, 3));
  o.detail << "max aligned ||s<0|W|0> - U|| = " << sci(worst) << " (tol 1e-8), max |P - 1/s^2| = "
           << sci(worst_prob) << " (tol 1e-9); n=2 theta=pi/2: s = " << be.s_one_norm
           << ", P = " << p.success_probability << " (16/121 = " << 16.0 / 121 << ")";
  o.require(worst <= 1e-8, "block deviation");
  o.require(worst_prob <= 1e-9, "success probability");
  o.require(std::abs(be.s_one_norm - 11.0 / 4) <= 1e-12, "s = 11/4");
  o.require(std::abs(p.success_probability - 16.0 / 121) <= 1e-9, "P = 16/121");
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 0, leak = 0;
  std::size_t m1 = 0, m2 = 0;
  const double s2 = 1 / std::sin(kPi / 10);
  for (const auto& f0 : block_factors()) {
    for (double th : kGrid) {
      const UccFactor f = f0.with_theta(th);
      const EndToEndReport r = verify_end_to_end(f, VerifyMode::oaa, 1e-8);
      worst = std::max(worst, r.deviation);
      leak = std::max(leak, r.leakage);
      if (r.s <= 2) {
        o.require(r.rounds == 1, "m = 1 for s <= 2");
        ++m1;
      } else if (r.s <= s2) {
        o.require(r.rounds == 2, "m = 2 for 2 < s <= 1/sin(pi/10)");
        ++m2;
      }
    }
  }
  o.detail << "max deviation " << sci(worst) << ", max leakage " << sci(leak)
           << " (tol 1e-8); " << m1 << " points with m=1, " << m2 << " with m=2";
  o.require(worst <= 1e-8, "deviation");
  o.require(leak <= 1e-8, "leakage");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0;
  std::size_t width = 0;
  for (double th : {0.4, 1.2}) {
    const UccFactor f({0, 1, 2}, {3, 4, 5}, th, 6);
    const EndToEndReport r = verify_end_to_end(f, VerifyMode::postselect, 1e-8);
    worst = std::max(worst, r.deviation);
    width = 2 * f.rank() + f.num_qubits();
  }
  const double secs = seconds_since(t0);
  o.detail << "n=3 postselect at " << width << " qubits, max deviation " << sci(worst)
           << " (tol 1e-8), runtime " << secs << " s (limit 300 s)";
  o.require(worst <= 1e-8, "deviation");
  o.require(secs <= 300, "runtime");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (std::size_t n = 1; n <= 20; ++n) {
    o.require(prepare_cnot_count(n) == prepare_cnot_closed_form(n), "prepare closed form");
    const auto rho = uniform_rho(n, 0);
    o.require(total_lcu_count(n, rho) == total_lcu_closed_form(n, rho), "total closed form");
  }
  o.require(prepare_cnot_count(2) == 76, "prepare(2) = 76");
  o.require(total_lcu_count(2, {0, 0}) == 498, "total(2) = 498");
  o.require(total_lcu_count(3, uniform_rho(3, 0)) == 2310, "total(3) = 2310");
  o.detail << "sum = closed form for n = 1..20; prepare(2) = " << prepare_cnot_count(2)
           << ", total(2) = " << total_lcu_count(2, {0, 0})
           << ", total(3) = " << total_lcu_count(3, uniform_rho(3, 0));
  return o;
}

Outcome criterion9() {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (double th : kGrid) {
      const UccFactor f = rank_factor(n, th);
      worst = std::max(worst, spectral_norm((unitary_of(synth_cascade(f)) - exact_unitary(f)).eval()));
    }
  }
  const UccFactor gapped({0, 1}, {4, 6}, 0.8, 7);
  worst = std::max(worst, spectral_norm(
                              (unitary_of(synth_cascade(gapped)) - exact_unitary(gapped)).eval()));
  std::size_t crossover = 0;
  bool monotone = true, growth = true;
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto rho = uniform_rho(n, 0);
    if (crossover == 0 && total_lcu_count(n, rho) < cascade_count(n, rho)) crossover = n;
    if (n > 1) {
      const auto prev = uniform_rho(n - 1, 0);
      monotone = monotone && total_lcu_count(n, rho) > total_lcu_count(n - 1, prev) &&
                 cascade_count(n, rho) > cascade_count(n - 1, prev);
      const double cas = static_cast<double>(cascade_count(n, rho)) /
                         static_cast<double>(cascade_count(n - 1, prev));
      const double lcu = static_cast<double>(total_lcu_count(n, rho)) /
                         static_cast<double>(total_lcu_count(n - 1, prev));
      growth = growth && cas > 4.0 && (n < 4 || lcu < 4.0);
    }
  }
  o.detail << "cascade ||U - exp|| = " << sci(worst) << " (tol 1e-8); first n with lcu_total < "
           << "cascade: " << crossover << " (claimed: rank five or higher; the FEB crossover "
           << "at n >= 9 is not reproducible without the external FEB formula); monotone "
           << (monotone ? "yes" : "no") << ", cascade ratio > 4 and LCU ratio < 4 for n >= 4: "
           << (growth ? "yes" : "no");
  o.require(worst <= 1e-8, "cascade unitary");
  o.require(crossover == 6, "crossover at n = 6");
  o.require(monotone, "monotonicity");
  o.require(growth, "growth rates");
  return o;
}

Outcome criterion10() {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (double th : kGrid) {
      const Statevector out = apply_circuit(synth_prepare(n, th), basis_state(2 * n, 0));
      worst = std::max(worst, (out.cwiseAbs() - target_amplitudes(n, th)).cwiseAbs().maxCoeff());
    }
  }
  // Closed-form angle outcome: recorded only.
  std::size_t closed_ok = 0, closed_total = 0;
  double closed_worst = 0;
  for (auto conv : {RotationConvention::half_angle, RotationConvention::full_angle}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (double th : kGrid) {
        const PrepareReport r =
            verify_prepare(n, th, 1e-9, {PrepareMode::closed_form, conv});
        ++closed_total;
        closed_ok += !r.used_fallback;
        closed_worst = std::max(closed_worst, r.max_deviation);
      }
    }
  }
  o.detail << "verified mode max |amp - sqrt(|alpha|/s)| = " << sci(worst)
           << " (tol 1e-9); closed-form angles (recorded, not asserted): " << closed_ok << "/"
           << closed_total << " points within tol, worst " << sci(closed_worst)
           << ", generic loader used otherwise";
  o.require(worst <= 1e-9, "verified amplitudes");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"SU(2) identity", criterion1},
      {"cube/square identities", criterion2},
      {"rank-2 expansion", criterion3},
      {"SELECT contract", criterion4},
      {"block encoding", criterion5},
      {"OAA with padding", criterion6},
      {"rank-3 desk check", criterion7},
      {"count formulas", criterion8},
      {"cascade baseline", criterion9},
      {"PREPARE amplitudes", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
