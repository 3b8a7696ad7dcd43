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

// lcu-ucc: expand, plan, synthesize, verify and cost LCU circuits for UCC
// factors. Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcu_ucc/circuit_io.hpp"
#include "lcu_ucc/cost.hpp"
#include "lcu_ucc/errors.hpp"
#include "lcu_ucc/lcu.hpp"

namespace {

using namespace lcu_ucc;
using nlohmann::json;

constexpr const char* kVersion = "lcu-ucc 0.1.0";
constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_coeff(std::complex<double> c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%+.17f%+.17fi", c.real(), c.imag());
  return buf;
}

struct FactorArgs {
  std::vector<std::size_t> occ, virt;
  std::size_t n_qubits = 0;
  std::vector<double> theta{0.0};

  UccFactor factor(double th) const {
    if (occ.empty() || virt.empty()) throw UsageError("--occ and --virt are required");
    std::size_t n = n_qubits;
    if (n == 0) {
      n = 1 + std::max(*std::max_element(occ.begin(), occ.end()),
                       *std::max_element(virt.begin(), virt.end()));
    }
    try {
      return UccFactor(occ, virt, th, n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  double single_theta() const {
    if (theta.size() != 1) throw UsageError("this command takes exactly one --theta");
    return theta.front();
  }
};

void add_factor_options(CLI::App* cmd, FactorArgs& fa, bool theta_list) {
  cmd->add_option("--occ", fa.occ, "occupied spin-orbitals, ascending")->delimiter(',');
  cmd->add_option("--virt", fa.virt, "virtual spin-orbitals, ascending")->delimiter(',');
  cmd->add_option("--n-qubits", fa.n_qubits, "total spin-orbitals (default: max index + 1)");
  auto* t = cmd->add_option("--theta", fa.theta, theta_list ? "amplitudes in radians" :
                                                              "amplitude in radians");
  t->delimiter(',');
}

PrepareOptions prepare_options(const std::string& mode, const std::string& rotation) {
  PrepareOptions p;
  p.mode = mode == "closed-form" ? PrepareMode::closed_form : PrepareMode::verified;
  p.convention = rotation == "full" ? RotationConvention::full_angle
                                    : RotationConvention::half_angle;
  return p;
}

/// Writes `payload` to `path`, or to stdout when `path` is empty.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << payload;
}

json provenance(const std::string& command_line) {
  return {{"command", command_line}, {"version", kVersion}};
}

std::string comment_header(const std::string& prefix, const std::string& command_line) {
  return prefix + " generated by " + kVersion + "\n" + prefix + " command: " + command_line +
         "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string command_line = "lcu-ucc";
  for (int i = 1; i < argc; ++i) command_line += std::string(" ") + argv[i];

  CLI::App app{"LCU circuits for factorized unitary coupled-cluster operators"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);

  // expand
  FactorArgs fx;
  auto* expand = app.add_subcommand("expand", "closed-form Pauli expansion of one factor");
  add_factor_options(expand, fx, false);

  // prepare-angles
  std::size_t pa_rank = 0;
  double pa_theta = 0.0;
  std::string pa_mode = "closed-form";
  auto* angles = app.add_subcommand("prepare-angles", "PREPARE rotation angles");
  angles->add_option("--rank", pa_rank, "excitation rank n")->required();
  angles->add_option("--theta", pa_theta, "amplitude in radians")->required();
  angles->add_option("--prepare", pa_mode, "closed-form or verified")
      ->check(CLI::IsMember({"closed-form", "verified"}));

  // plan
  FactorArgs fp;
  std::string plan_out;
  auto* plan = app.add_subcommand("plan", "SELECT plan with the full code table");
  add_factor_options(plan, fp, false);
  plan->add_option("--out", plan_out, "JSON output path (default stdout)");

  // synth
  FactorArgs fs;
  std::string part = "w", synth_out, s_mode = "verified", s_rot = "half";
  bool qasm = false;
  auto* synth = app.add_subcommand("synth", "emit a circuit");
  add_factor_options(synth, fs, false);
  synth->add_option("--part", part, "prepare, select, w, oaa or cascade")
      ->check(CLI::IsMember({"prepare", "select", "w", "oaa", "cascade"}));
  synth->add_flag("--qasm", qasm, "OpenQASM 2.0 instead of JSON");
  synth->add_option("--prepare", s_mode)->check(CLI::IsMember({"closed-form", "verified"}));
  synth->add_option("--rotation", s_rot)->check(CLI::IsMember({"half", "full"}));
  synth->add_option("--out", synth_out, "output path (default stdout)");

  // verify
  FactorArgs fv;
  std::string v_mode = "oaa", v_prep = "verified", v_rot = "half", verify_out;
  double tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "dense end-to-end check against exp(theta K)");
  add_factor_options(verify, fv, true);
  verify->add_option("--mode", v_mode)->check(CLI::IsMember({"postselect", "oaa"}));
  verify->add_option("--tol", tol)->check(CLI::PositiveNumber);
  verify->add_option("--prepare", v_prep)->check(CLI::IsMember({"closed-form", "verified"}));
  verify->add_option("--rotation", v_rot)->check(CLI::IsMember({"half", "full"}));
  verify->add_option("--out", verify_out, "JSON report path (default stdout)");

  // count
  std::size_t rank_max = 0, c_rank = 0;
  std::uint64_t rho_fill = 0;
  std::vector<std::uint64_t> rho;
  std::string csv_path;
  auto* count = app.add_subcommand("count", "CNOT-count model and cascade comparison");
  count->add_option("--rank-max", rank_max, "emit one CSV row per rank 1..N");
  count->add_option("--rho-fill", rho_fill, "uniform gap size for every rho_i");
  auto* rho_opt = count->add_option("--rho", rho, "explicit gaps (needs --rank)")->delimiter(',');
  auto* rank_opt = count->add_option("--rank", c_rank, "single rank for --rho");
  rho_opt->needs(rank_opt);
  count->add_option("--csv", csv_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*expand) {
      const UccFactor f = fx.factor(fx.single_theta());
      std::cout << "# " << f.describe() << " theta=" << fmt17(f.theta()) << "\n";
      for (const auto& [s, c] : ucc_factor_expand(f).ordered_terms()) {
        std::cout << fmt_coeff(c) << "  " << s.letters() << "\n";
      }
      return kExitPass;
    }

    if (*angles) {
      const auto a = pa_mode == "closed-form" ? prepare_angles(pa_rank, pa_theta)
                                        : verified_prepare_angles(pa_rank, pa_theta);
      std::cout << "# rank=" << pa_rank << " theta=" << fmt17(pa_theta) << " prepare=" << pa_mode
                << "\n";
      for (std::size_t k = 0; k < a.size(); ++k) {
        std::cout << "Theta_" << (k + 1) << " " << fmt17(a[k]) << "\n";
      }
      return kExitPass;
    }

    if (*plan) {
      const UccFactor f = fp.factor(fp.single_theta());
      json j = plan_to_json(derive_select_plan(f));
      j["provenance"] = provenance(command_line);
      emit(plan_out, j.dump(2) + "\n");
      return kExitPass;
    }

    if (*synth) {
      const UccFactor f = fs.factor(fs.single_theta());
      LcuOptions opts;
      opts.prepare = prepare_options(s_mode, s_rot);
      Circuit c;
      if (part == "prepare") {
        c = prepare_checked(f.rank(), f.theta(), opts.prepare_tolerance, opts.prepare).circuit;
      } else if (part == "select") {
        c = synth_select(f, derive_select_plan(f));
      } else if (part == "w") {
        c = build_block_encoding(f, opts).w;
      } else if (part == "oaa") {
        c = pad_and_synth_oaa(f, opts).circuit;
      } else {
        c = synth_cascade(f);
      }
      if (qasm) {
        emit(synth_out, to_qasm(c, std::string("generated by ") + kVersion + "\ncommand: " +
                                       command_line));
      } else {
        json j = circuit_to_json(c);
        j["provenance"] = provenance(command_line);
        emit(synth_out, j.dump(2) + "\n");
      }
      return kExitPass;
    }

    if (*verify) {
      LcuOptions opts;
      opts.prepare = prepare_options(v_prep, v_rot);
      const VerifyMode mode = v_mode == "oaa" ? VerifyMode::oaa : VerifyMode::postselect;
      std::vector<double> grid = fv.theta;
      std::sort(grid.begin(), grid.end());
      json rows = json::array();
      bool pass = true;
      for (double th : grid) {
        const EndToEndReport r = verify_end_to_end(fv.factor(th), mode, tol, opts);
        pass = pass && r.pass;
        rows.push_back({{"theta", r.theta},
                        {"deviation", r.deviation},
                        {"s", r.s},
                        {"s_effective", r.s_effective},
                        {"rounds", r.rounds},
                        {"leakage", r.leakage},
                        {"success_probability", r.success_probability},
                        {"phase", r.phase},
                        {"prepare_fallback", r.prepare_fallback},
                        {"pass", r.pass}});
      }
      const UccFactor f0 = fv.factor(grid.front());
      json report = {{"command", "verify"},
                     {"params",
                      {{"occ", f0.occupied()},
                       {"virt", f0.virtuals()},
                       {"n_qubits", f0.num_qubits()},
                       {"rank", f0.rank()},
                       {"mode", v_mode},
                       {"tol", tol},
                       {"prepare", v_prep},
                       {"rotation", v_rot}}},
                     {"grid", rows},
                     {"pass", pass},
                     {"provenance", provenance(command_line)}};
      emit(verify_out, report.dump(2) + "\n");
      if (!verify_out.empty()) std::cout << (pass ? "PASS" : "FAIL") << "\n";
      return pass ? kExitPass : kExitFail;
    }

    if (*count) {
      if (!rho.empty() || *rank_opt) {
        if (c_rank == 0) throw UsageError("--rank must be at least 1");
        const CostReport r = cost_report(c_rank, rho.empty() ? uniform_rho(c_rank, rho_fill) : rho);
        const json j = {{"rank", r.rank},
                        {"rho", r.rho},
                        {"prepare_cnots", r.prepare_cnots},
                        {"select_cnots", r.select_cnots},
                        {"reference_init_cnots", r.reference_init_cnots},
                        {"total_cnots", r.total_cnots},
                        {"cascade_cnots", r.cascade_cnots},
                        {"provenance", provenance(command_line)}};
        emit(csv_path, j.dump(2) + "\n");
        return kExitPass;
      }
      if (rank_max == 0) throw UsageError("count needs --rank-max or --rank");
      emit(csv_path, comment_header("#", command_line) + emit_comparison(rank_max, rho_fill));
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
