// Copyright 2026 The extmap Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, INFO lines for extra
// measurements. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "extmap/cli/commands.hpp"
#include "extmap/cp_split.hpp"
#include "extmap/dilation.hpp"
#include "extmap/entangled.hpp"
#include "extmap/extension.hpp"
#include "extmap/random.hpp"
#include "extmap/standard_maps.hpp"
#include "oracle.hpp"

using namespace extmap;
using nlohmann::json;

namespace {

constexpr double kResidual = 1e-9;
constexpr double kExact = 1e-10;
constexpr std::size_t kStates = 50;

int failures = 0;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void criterion(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << "\n";
}

void info(const std::string& text) { std::cout << "INFO " << text << "\n"; }

struct Named {
  std::string name;
  LinearMap map;
};

std::vector<Named> zoo() {
  random::Engine rng(2005);
  return {{"identity", maps::identity(2)},
          {"unitary_conjugation", maps::unitary_conjugation(random::unitary(2, rng))},
          {"depolarizing(0.25)", maps::depolarizing(2, 0.25)},
          {"depolarizing(1)", maps::depolarizing(2, 1.0)},
          {"amplitude_damping(0.3)", maps::amplitude_damping(0.3)},
          {"amplitude_damping(0.9)", maps::amplitude_damping(0.9)},
          {"transpose", maps::transpose(2)},
          {"ncp_family(0.5)", ncp_family(0.5)},
          {"ncp_family(1)", ncp_family(1.0)}};
}

std::vector<Named> random_maps() {
  std::vector<Named> out;
  random::Engine rng(1);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int i = 0; i < 50; ++i) out.push_back({"random N=" + std::to_string(n), random::tp_map(n, rng)});
  return out;
}

double min_eig(const ComplexMatrix& m) { return oracle::jacobi_eigenvalues(m).back(); }

struct SplitChecks {
  double reconstruction_literal = 0.0;
  double reconstruction_symmetric = 0.0;
  double extension_literal = 0.0;
  double extension_symmetric = 0.0;
};

SplitChecks check_split(const CPSplit& s, random::Engine& rng) {
  SplitChecks c;
  for (std::size_t k = 0; k < kStates; ++k) {
    const ComplexMatrix rho = random::density_matrix(s.dim(), rng);
    c.reconstruction_literal = std::max(c.reconstruction_literal, reconstruct(s, rho, Variant::Literal).residual);
    c.reconstruction_symmetric =
        std::max(c.reconstruction_symmetric, reconstruct(s, rho, Variant::Symmetric).residual);
    c.extension_literal = std::max(c.extension_literal, extension_residual(s, rho, Variant::Literal));
    c.extension_symmetric = std::max(c.extension_symmetric, extension_residual(s, rho, Variant::Symmetric));
  }
  return c;
}

struct StructureChecks {
  double jk_identity = 0.0;
  double j_min = 1e300;
  double k_min = 1e300;
};

void structure(const CPSplit& s, StructureChecks& acc) {
  const auto n = static_cast<Eigen::Index>(s.dim());
  acc.jk_identity = std::max(acc.jk_identity, (s.j - s.k - ComplexMatrix::Identity(n, n)).norm());
  acc.j_min = std::min(acc.j_min, min_eig(s.j));
  acc.k_min = std::min(acc.k_min, min_eig(s.k));
}

bool structure_ok(const StructureChecks& c) {
  return c.jk_identity <= kResidual && c.j_min >= 1.0 - kResidual && c.k_min >= -kExact;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(std::vector<std::string> args, const std::string* stdin_text = nullptr) {
  args.insert(args.begin(), "extmap");
  std::ostringstream out, err;
  std::istringstream in(stdin_text ? *stdin_text : std::string());
  auto* old = std::cin.rdbuf();
  if (stdin_text) std::cin.rdbuf(in.rdbuf());
  const int code = cli::run(args, out, err);
  std::cin.rdbuf(old);
  return {code, out.str()};
}

std::string fixture(const std::string& name) { return std::string(EXTMAP_FIXTURE_DIR) + "/" + name; }

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Named> fixed = zoo();
  const std::vector<Named> randoms = random_maps();
  std::vector<Named> all = fixed;
  all.insert(all.end(), randoms.begin(), randoms.end());

  std::vector<CPSplit> splits;
  splits.reserve(all.size());
  for (const Named& m : all) splits.push_back(split(m.map));

  // 1 and 2
  random::Engine rng(42);
  SplitChecks worst;
  double zoo_symmetric = 0.0;
  std::string zoo_symmetric_map = "none";
  double random_symmetric = 0.0;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const SplitChecks c = check_split(splits[i], rng);
    worst.reconstruction_literal = std::max(worst.reconstruction_literal, c.reconstruction_literal);
    worst.reconstruction_symmetric = std::max(worst.reconstruction_symmetric, c.reconstruction_symmetric);
    worst.extension_literal = std::max(worst.extension_literal, c.extension_literal);
    if (i < fixed.size()) {
      if (c.extension_symmetric > zoo_symmetric) {
        zoo_symmetric = c.extension_symmetric;
        zoo_symmetric_map = fixed[i].name;
      }
    } else {
      random_symmetric = std::max(random_symmetric, c.extension_symmetric);
    }
  }
  criterion(1, "reconstruction identity",
            worst.reconstruction_literal <= kResidual && worst.reconstruction_symmetric <= kResidual,
            "max residual literal " + sci(worst.reconstruction_literal) + ", symmetric " +
                sci(worst.reconstruction_symmetric) + " (bound 1e-9, " + std::to_string(all.size()) + " maps x " +
                std::to_string(kStates) + " states)");

  const CPSplit transpose_split = split(maps::transpose(2));
  const double transpose_symmetric =
      extension_residual(transpose_split, matrix_unit(2, 0, 0), Variant::Symmetric);
  criterion(2, "extension condition",
            worst.extension_literal <= kResidual && zoo_symmetric > 1e-3,
            "literal max residual " + sci(worst.extension_literal) + " (bound 1e-9); symmetric max over zoo " +
                sci(zoo_symmetric) + " at " + zoo_symmetric_map + ", transpose at |0><0| " +
                sci(transpose_symmetric) + " (expected > 1e-3)");
  info("symmetric extension residual max over random maps " + sci(random_symmetric));

  // 3
  {
    StructureChecks c;
    random::Engine rd(7);
    std::vector<CPSplit> tp_inputs = splits;
    for (int i = 0; i < 20; ++i) tp_inputs.push_back(split(random::rank_deficient_k_map(2 + i % 3, rd)));
    for (const CPSplit& s : tp_inputs) structure(s, c);
    double literal = 0.0;
    random::Engine rl(8);
    for (int i = 0; i < 20; ++i) {
      const std::size_t n = 2 + static_cast<std::size_t>(i) % 3;
      const CPSplit s = split(random::tp_map(n, rl));
      const int ni = static_cast<int>(n);
      literal = std::max(literal, (oracle::literal_trace_functional(s.lambda_plus.choi(), ni) - s.j).cwiseAbs().maxCoeff());
      literal = std::max(literal, (oracle::literal_trace_functional(s.lambda_minus.choi(), ni) - s.k).cwiseAbs().maxCoeff());
    }
    criterion(3, "trace-preservation structure", structure_ok(c) && literal <= kExact,
              "||J-K-I|| " + sci(c.jk_identity) + ", min eig J " + sci(c.j_min) + ", min eig K " + sci(c.k_min) +
                  ", literal partial-sum gap " + sci(literal) + " (" + std::to_string(tp_inputs.size()) +
                  " maps)");
  }

  // 4
  {
    random::Engine rd(9);
    double worst_residual = 0.0;
    std::size_t min_kernel = 1000;
    bool passed = true;
    for (int i = 0; i < 20; ++i) {
      const CPSplit s = split(random::rank_deficient_k_map(2 + static_cast<std::size_t>(i) % 3, rd));
      const AnnihilationReport r = verify_annihilation(s, ToleranceConfig{}, kStates, 100 + static_cast<std::uint64_t>(i));
      worst_residual = std::max(worst_residual, r.max_residual());
      min_kernel = std::min(min_kernel, r.kernel_dim);
      passed = passed && r.passed;
    }
    criterion(4, "annihilation lemmas", passed && worst_residual <= kResidual && min_kernel >= 1,
              "max residual over kernel-diagonal, kernel-cross, L_i|phi_q>, support projection " +
                  sci(worst_residual) + "; smallest kernel dimension " + std::to_string(min_kernel) +
                  " (20 maps)");
  }

  // 5
  {
    const RealVector& ev = transpose_split.decomposition.eigenvalues;
    RealVector expected(4);
    expected << 1.0, 1.0, 1.0, -1.0;
    const double eig_gap = (ev - expected).cwiseAbs().maxCoeff();
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const double j_gap = (transpose_split.j - 1.5 * id).norm();
    const double k_gap = (transpose_split.k - 0.5 * id).norm();
    const int exit_code = cli_run({"dilate", fixture("transpose.json")}).code;
    const bool pass = eig_gap <= kExact && j_gap <= kExact && k_gap <= kExact && transpose_split.l_plus == 3 &&
                      transpose_split.l_minus == 1 && exit_code == 2;
    criterion(5, "transpose golden values", pass,
              "eigenvalue gap " + sci(eig_gap) + ", J gap " + sci(j_gap) + ", K gap " + sci(k_gap) + ", l+ " +
                  std::to_string(transpose_split.l_plus) + ", l- " + std::to_string(transpose_split.l_minus) +
                  ", dilate exit " + std::to_string(exit_code));
  }

  // 6
  {
    std::vector<LinearMap> cptp;
    for (const Named& m : fixed)
      if (check_cp(m.map).completely_positive) cptp.push_back(m.map);
    const std::size_t zoo_count = cptp.size();
    random::Engine rc(11);
    for (int i = 0; i < 20; ++i) {
      const std::size_t n = 2 + static_cast<std::size_t>(i) % 2;
      cptp.push_back(kraus_to_map(random::cptp_kraus(n, 1 + static_cast<std::size_t>(i) % (n * n), rc)));
    }
    double unitarity = 0.0, round_trip = 0.0;
    for (std::size_t i = 0; i < cptp.size(); ++i) {
      const UnitaryDilation d = dilate(cptp[i]);
      const DilationRoundTrip t = dilation_round_trip(d, cptp[i], kStates, 200 + i);
      unitarity = std::max(unitarity, t.unitarity_residual);
      round_trip = std::max(round_trip, t.max_residual);
    }
    criterion(6, "dilation", unitarity <= kExact && round_trip <= kResidual,
              "unitarity " + sci(unitarity) + " (bound 1e-10), round trip " + sci(round_trip) + " (bound 1e-9), " +
                  std::to_string(zoo_count) + " zoo + 20 random channels");
  }

  // 7
  {
    random::Engine rw(13);
    int mismatches = 0, entangled = 0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t ns = 2 + static_cast<std::size_t>(i % 2), ne = 2 + static_cast<std::size_t>(i % 3);
      ComplexVector amp;
      if (i % 5 == 0) {
        const ComplexVector a = random::pure_state(ns, rw), b = random::pure_state(ne, rw);
        amp.resize(static_cast<Eigen::Index>(ns * ne));
        for (Eigen::Index x = 0; x < a.size(); ++x)
          for (Eigen::Index y = 0; y < b.size(); ++y) amp(x * b.size() + y) = a(x) * b(y);
      } else {
        amp = random::pure_state(ns * ne, rw);
      }
      const WitnessCertificate c = extension_witness(JointPureState(ns, ne, amp));
      const ComplexMatrix& red = c.reduced_state;
      const double purity = (red * red).trace().real();
      const bool impossible = c.verdict == WitnessVerdict::PositiveExtensionImpossible;
      if (impossible != (purity < 1.0 - kResidual)) ++mismatches;
      if (impossible) ++entangled;
    }
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const WitnessCertificate b = extension_witness(JointPureState(2, 2, bell));
    const bool bell_ok = std::abs(b.purity - 0.5) <= kExact && b.verdict == WitnessVerdict::PositiveExtensionImpossible;
    criterion(7, "witness dichotomy", mismatches == 0 && bell_ok,
              std::to_string(mismatches) + " mismatches over 100 states (" + std::to_string(entangled) +
                  " entangled); Bell purity " + sci(b.purity) + ", verdict " + std::string(to_string(b.verdict)));
  }

  // 8
  std::vector<CPSplit> extracted;
  {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const JointPureState phi(2, 2, bell);
    const auto pipeline = [&](const ComplexMatrix& u, double& min_choi, SplitChecks& checks, StructureChecks& st,
                              double& annihilation) {
      const AffineDynamics a = induced_dynamics(phi, u);
      min_choi = min_eig(a.tp_linear_form.choi());
      const CPSplit s = split(a.tp_linear_form);
      random::Engine r(17);
      checks = check_split(s, r);
      structure(s, st);
      annihilation = verify_annihilation(s, ToleranceConfig{}, kStates, 17).max_residual();
      extracted.push_back(s);
    };
    const auto downstream_ok = [](const SplitChecks& c, const StructureChecks& st, double ann) {
      return c.reconstruction_literal <= kResidual && c.reconstruction_symmetric <= kResidual &&
             c.extension_literal <= kResidual && structure_ok(st) && ann <= kResidual;
    };

    double swap_min = 0.0, swap_ann = 0.0;
    SplitChecks swap_checks;
    StructureChecks swap_st;
    pipeline(oracle::swap_matrix(2), swap_min, swap_checks, swap_st, swap_ann);
    criterion(8, "entangled pipeline (Bell + SWAP)", swap_min < -1e-6 && downstream_ok(swap_checks, swap_st, swap_ann),
              "min Choi eigenvalue " + sci(swap_min) + " (expected < -1e-6); reconstruction " +
                  sci(std::max(swap_checks.reconstruction_literal, swap_checks.reconstruction_symmetric)) +
                  ", extension " + sci(swap_checks.extension_literal) + ", ||J-K-I|| " + sci(swap_st.jk_identity) +
                  ", annihilation " + sci(swap_ann));

    ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    double cnot_min = 0.0, cnot_ann = 0.0;
    SplitChecks cnot_checks;
    StructureChecks cnot_st;
    pipeline(cnot, cnot_min, cnot_checks, cnot_st, cnot_ann);
    info("Bell + CNOT pipeline: min Choi eigenvalue " + sci(cnot_min) + ", downstream checks " +
         (downstream_ok(cnot_checks, cnot_st, cnot_ann) ? "pass" : "fail") + ", reconstruction " +
         sci(std::max(cnot_checks.reconstruction_literal, cnot_checks.reconstruction_symmetric)));
  }

  // 9
  {
    std::vector<const CPSplit*> processed;
    for (const CPSplit& s : splits) processed.push_back(&s);
    for (const CPSplit& s : extracted) processed.push_back(&s);
    int violations = 0;
    std::size_t max_l = 0;
    for (const CPSplit* s : processed) {
      const DimensionReport r = dimension_report(*s);
      const std::size_t n = s->dim();
      const std::size_t dim_k = s->l_minus > 0 ? n : 0;
      max_l = std::max(max_l, s->l_plus + s->l_minus);
      if (s->l_plus + s->l_minus > n * n) ++violations;
      if (r.extension_dim != n + dim_k) ++violations;
      if (r.dilation_dim != n * s->l_plus + dim_k * s->l_minus) ++violations;
    }
    criterion(9, "dimension bound", violations == 0,
              std::to_string(violations) + " violations over " + std::to_string(processed.size()) + " maps");
  }

  // 10
  {
    const std::vector<std::string> maps_in = {"transpose.json",   "identity_superop_a.json", "amplitude_damping.json",
                                              "hadamard.json",    "depolarizing_choi.json",  "ncp_family.json",
                                              "signed_kraus.json"};
    const std::vector<std::string> joint = {"bell_swap_extract.json", "bell_cnot_extract.json"};
    int nondeterministic = 0, broken = 0;
    const auto twice = [&](const std::vector<std::string>& args, const std::string* in = nullptr) {
      const CliResult a = cli_run(args, in), b = cli_run(args, in);
      if (a.out != b.out || a.code != b.code) ++nondeterministic;
      return a;
    };
    for (const std::string& f : maps_in) {
      if (twice({"decompose", fixture(f)}).code != 0) ++broken;
      if (twice({"verify", fixture(f)}).code != 0) ++broken;
    }
    for (const std::string& f : joint) {
      const CliResult ex = twice({"extract", fixture(f)});
      if (ex.code != 0) {
        ++broken;
        continue;
      }
      if (twice({"decompose", "-"}, &ex.out).code != 0) ++broken;
      if (twice({"verify", "-"}, &ex.out).code != 0) ++broken;
    }
    twice({"witness", fixture("bell_witness.json")});
    twice({"dilate", fixture("amplitude_damping.json")});
    criterion(10, "CLI determinism and closure", nondeterministic == 0 && broken == 0,
              std::to_string(nondeterministic) + " nondeterministic reports, " + std::to_string(broken) +
                  " pipeline failures over " + std::to_string(maps_in.size() + joint.size()) + " fixtures");
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  info("elapsed " + std::to_string(seconds) + " s");
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
