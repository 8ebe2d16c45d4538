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

#include "extmap/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "extmap/cli/document.hpp"
#include "extmap/cli/report.hpp"
#include "extmap/random.hpp"

namespace extmap::cli {

namespace {

using nlohmann::json;

enum class Command { Decompose, Verify, Dilate, Witness, Extract };

const char* command_name(Command c) {
  switch (c) {
    case Command::Decompose: return "decompose";
    case Command::Verify: return "verify";
    case Command::Dilate: return "dilate";
    case Command::Witness: return "witness";
    case Command::Extract: return "extract";
  }
  return "?";
}

struct Options {
  std::optional<double> tol_eig;
  std::optional<double> tol_residual;
  std::string format = "json";
  std::string variant = "literal";
  std::size_t samples = 50;
  std::optional<std::uint64_t> seed;
};

struct Outcome {
  int code = kSuccess;
  json report;
  std::string diagnostic;
};

// Thrown for failures that must exit with a specific code.
struct CommandFailure {
  int code;
  std::string message;
};

ToleranceConfig resolve_tolerance(const MapSpecDocument& doc, const Options& opt) {
  ToleranceConfig tol;
  if (doc.zero_eig_rel) tol.zero_eig_rel = *doc.zero_eig_rel;
  if (doc.residual_abs) tol.residual_abs = *doc.residual_abs;
  if (opt.tol_eig) tol.zero_eig_rel = *opt.tol_eig;
  if (opt.tol_residual) tol.residual_abs = *opt.tol_residual;
  tol.validate();
  return tol;
}

json header(Command c, const std::string& bytes, const ToleranceConfig& tol) {
  return {{"tool", kToolVersion},
          {"command", command_name(c)},
          {"input_digest", sha256_hex(bytes)},
          {"tolerance", {{"zero_eig_rel", tol.zero_eig_rel}, {"residual_abs", tol.residual_abs}}}};
}

const LinearMap& require_map(const MapSpecDocument& doc) {
  if (!doc.map) throw CommandFailure{kInvalidInput, "command needs a map document, got kind '" +
                                                        std::string(to_string(doc.kind)) + "'"};
  return *doc.map;
}

json verdicts(const LinearMap& map, const ToleranceConfig& tol) {
  const TpVerdict tp = check_tp(map, tol);
  json v = {{"is_tp", tp.trace_preserving},
            {"tp_residual", tp.residual},
            {"is_hp", is_hermiticity_preserving(map, tol)},
            {"hp_residual", hermiticity_preservation_residual(map)}};
  if (is_hermiticity_preserving(map, tol)) {
    const CpVerdict cp = check_cp(map, tol);
    v["is_cp"] = cp.completely_positive;
    v["min_choi_eigenvalue"] = cp.min_eigenvalue;
  } else {
    v["is_cp"] = false;
    v["min_choi_eigenvalue"] = nullptr;
  }
  return v;
}

void decomposition(json& report, const LinearMap& map, const ToleranceConfig& tol, std::size_t samples,
                   std::uint64_t seed, Variant variant) {
  report["dim"] = map.dim();
  report["verdicts"] = verdicts(map, tol);
  const CPSplit s = split(map, tol);
  report["choi_eigenvalues"] = to_json(s.decomposition.eigenvalues);
  report["j_matrix"] = to_json(s.j);
  report["k_matrix"] = to_json(s.k);
  report["j_min_eig"] = hermitian_eig(s.j, tol).values.minCoeff();
  report["k_rank"] = s.support_basis.size();
  report["kernel_dim"] = s.kernel_basis.size();
  report["l_plus"] = s.l_plus;
  report["l_minus"] = s.l_minus;
  report["dimensions"] = to_json(dimension_report(s));
  report["annihilation"] = to_json(verify_annihilation(s, tol, samples, seed));
  report["trace_functionals"] = to_json(trace_functionals(s, samples, seed, tol));
  const OmegaReport omega = omega_choi_report(s, tol);
  report["omega"] = {{"literal", to_json(omega.literal)}, {"symmetric", to_json(omega.symmetric)}};
  random::Engine rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i)
    worst = std::max(worst, reconstruct(s, random::density_matrix(map.dim(), rng), variant, tol).residual);
  report["reconstruction_residual"] = worst;
}

Outcome run_map_command(Command c, const MapSpecDocument& doc, const std::string& bytes, const Options& opt) {
  const ToleranceConfig tol = resolve_tolerance(doc, opt);
  const LinearMap& map = require_map(doc);
  const std::uint64_t seed = opt.seed.value_or(doc.seed.value_or(0));
  const Variant variant = variant_from_string(opt.variant);
  Outcome outcome;
  json& report = outcome.report;
  report = header(c, bytes, tol);
  report["seed"] = seed;
  report["samples"] = opt.samples;

  if (c == Command::Dilate) {
    report["dim"] = map.dim();
    report["verdicts"] = verdicts(map, tol);
    const UnitaryDilation dil = dilate(map, tol);
    const DilationRoundTrip trip = dilation_round_trip(dil, map, opt.samples, seed, tol);
    report["dilation"] = {{"ancilla_dim", dil.ancilla_dim},
                          {"ancilla_ref_index", dil.ancilla_ref_index},
                          {"unitary", to_json(dil.unitary)},
                          {"unitarity_residual", trip.unitarity_residual},
                          {"round_trip_residual", trip.max_residual},
                          {"passed", trip.passed && trip.unitarity_residual <= tol.residual_abs}};
    if (!report["dilation"]["passed"].get<bool>()) {
      outcome.code = kVerificationFailure;
      outcome.diagnostic = "dilation round trip exceeded tolerance";
    }
    return outcome;
  }

  report["variant"] = std::string(to_string(variant));
  decomposition(report, map, tol, opt.samples, seed, variant);
  if (c == Command::Verify) {
    const CPSplit s = split(map, tol);
    random::Engine rng(seed);
    double worst = 0.0;
    double worst_extension = 0.0;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const ComplexMatrix rho = random::density_matrix(map.dim(), rng);
      worst = std::max(worst, reconstruct(s, rho, variant, tol).residual);
      worst_extension = std::max(worst_extension, extension_residual(s, rho, variant, tol));
    }
    const bool passed = worst <= tol.residual_abs;
    report["reconstruction"] = {{"max_residual", worst},
                                {"max_extension_residual", worst_extension},
                                {"passed", passed}};
    if (!passed) {
      std::ostringstream os;
      os.precision(17);
      os << "reconstruction residual " << worst << " exceeds " << tol.residual_abs;
      outcome.code = kVerificationFailure;
      outcome.diagnostic = os.str();
    }
  }
  return outcome;
}

Outcome run_joint_command(Command c, const MapSpecDocument& doc, const std::string& bytes, const Options& opt) {
  if (doc.kind != DocumentKind::JointDynamics) {
    throw CommandFailure{kInvalidInput, std::string(command_name(c)) + " needs a joint_dynamics document"};
  }
  const ToleranceConfig tol = resolve_tolerance(doc, opt);
  const JointPureState phi(doc.system_dim, doc.environment_dim, *doc.state, tol);
  Outcome outcome;
  json& report = outcome.report;
  report = header(c, bytes, tol);
  report["dims"] = {doc.system_dim, doc.environment_dim};
  if (c == Command::Witness) {
    report["witness"] = to_json(extension_witness(phi, tol));
    return outcome;
  }
  if (!doc.unitary) throw CommandFailure{kInvalidInput, "/unitary: extract needs a joint unitary"};
  const AffineDynamics dyn = induced_dynamics(phi, *doc.unitary, tol);
  report["affine"] = {{"linear_part", map_document(dyn.linear_part)},
                      {"constant_part", to_json(dyn.constant_part)},
                      {"system_state", to_json(dyn.system_state)},
                      {"environment_state", to_json(dyn.environment_state)},
                      {"consistency_residual", dyn.consistency_residual}};
  report["verdicts"] = verdicts(dyn.tp_linear_form, tol);
  report["map"] = map_document(dyn.tp_linear_form);
  return outcome;
}

Outcome run_one(Command c, const std::string& bytes, const Options& opt) {
  Outcome outcome;
  try {
    const MapSpecDocument doc = parse_document(bytes);
    if (c == Command::Witness || c == Command::Extract) return run_joint_command(c, doc, bytes, opt);
    return run_map_command(c, doc, bytes, opt);
  } catch (const DocumentError& e) {
    outcome.code = kInvalidInput;
    outcome.diagnostic = std::string("invalid input at ") + e.what();
  } catch (const CommandFailure& f) {
    outcome.code = f.code;
    outcome.diagnostic = f.message;
  } catch (const Error& e) {
    const bool input_problem = e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::DimensionMismatch;
    outcome.code = input_problem ? kInvalidInput : kPreconditionFailure;
    outcome.diagnostic = e.what();
  }
  outcome.report = nullptr;
  return outcome;
}

std::optional<std::string> read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompose, extend and dilate linear maps on density matrices", "extmap"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol-eig", opt.tol_eig, "Relative threshold for zero eigenvalues");
  app.add_option("--tol-residual", opt.tol_residual, "Absolute Frobenius residual bound");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--variant", opt.variant, "Extension/Omega construction")
      ->check(CLI::IsMember({"literal", "symmetric"}));

  std::vector<std::string> files;
  Command command = Command::Decompose;
  const auto add = [&](Command c, const char* help, bool sampled) {
    CLI::App* sub = app.add_subcommand(command_name(c), help);
    sub->add_option("files", files, "Input documents ('-' for stdin)")->required();
    if (sampled) {
      sub->add_option("--samples", opt.samples, "Random states per check");
      sub->add_option("--seed", opt.seed, "Seed for random states");
    }
    sub->callback([&command, c] { command = c; });
  };
  add(Command::Decompose, "Split a trace-preserving map into CP parts and report J, K, Omega", true);
  add(Command::Verify, "Check Tr_e[Omega(E(rho))] against the map on random states", true);
  add(Command::Dilate, "Build a unitary dilation of a CPTP map", true);
  add(Command::Witness, "Decide whether a joint pure state admits a positive extension", false);
  add(Command::Extract, "Induced subsystem map of a joint state under a joint unitary", false);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  std::vector<std::string> sources(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto text = read_source(files[i]);
    if (!text) {
      err << "extmap: " << files[i] << ": cannot read file\n";
      return kInvalidInput;
    }
    sources[i] = std::move(*text);
  }

  std::vector<std::future<Outcome>> pending;
  pending.reserve(sources.size());
  for (const auto& bytes : sources) {
    pending.push_back(std::async(std::launch::async, [&, command] { return run_one(command, bytes, opt); }));
  }

  int code = kSuccess;
  json reports = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    Outcome o = pending[i].get();
    if (!o.diagnostic.empty()) err << "extmap: " << files[i] << ": " << o.diagnostic << "\n";
    code = std::max(code, o.code);
    if (opt.format == "text" && !o.report.is_null()) {
      if (files.size() > 1) text << "# " << files[i] << "\n";
      text << render_text(o.report);
    }
    reports.push_back(std::move(o.report));
  }

  if (opt.format == "text") {
    out << text.str();
  } else if (reports.size() == 1) {
    if (!reports[0].is_null()) out << reports[0].dump(2) << "\n";
  } else {
    out << reports.dump(2) << "\n";
  }
  return code;
}

}  // namespace extmap::cli
