// Copyright 2026 The nmrvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "nmrvqe/ansatz.hpp"
#include "nmrvqe/eigensolver.hpp"
#include "nmrvqe/error.hpp"
#include "nmrvqe/io.hpp"
#include "nmrvqe/nmr.hpp"
#include "nmrvqe/optimizer.hpp"
#include "nmrvqe/vqe.hpp"

namespace nmrvqe::cli {

namespace {

using io::Json;

struct RunConfig {
  std::optional<std::string> system;
  std::optional<std::vector<double>> lines;
  std::optional<double> nu_a;
  std::optional<double> nu_b;
  std::optional<double> j;
  std::optional<std::string> hamiltonian;
  std::optional<std::string> ansatz;
  std::optional<std::string> circuit;
  std::optional<std::string> optimizer;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<double> step_size;
  std::optional<double> simplex_scale;
  std::optional<double> j_tolerance;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> trace;
  std::optional<std::string> out;
  std::optional<double> flag_threshold;
  std::vector<std::string> references;
  std::optional<std::string> config;
};

template <class T>
void merge(std::optional<T>& flag, const std::optional<T>& file) {
  if (!flag && file) flag = file;
}

template <class T>
std::optional<T> file_value(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::kUsage, std::string("config: field '") + key + "' has the wrong type");
  }
}

// Values from --config fill every field the command line left unset.
void apply_config_file(RunConfig& cfg) {
  if (!cfg.config) return;
  const Json j = io::read_json_file(*cfg.config);
  if (!j.is_object()) fail(ErrorKind::kUsage, "config: top level must be an object");
  static const std::set<std::string> known = {
      "system",    "lines_hz",      "nu_a",        "nu_b",  "j",    "hamiltonian",
      "ansatz",    "circuit",       "optimizer",   "tol",   "max_iter",
      "step_size", "simplex_scale", "j_tolerance", "shots", "seed", "trace",
      "out",       "flag_threshold", "references"};
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) {
      fail(ErrorKind::kUsage, "config: unknown field '" + item.key() + "'");
    }
  }
  merge(cfg.system, file_value<std::string>(j, "system"));
  merge(cfg.lines, file_value<std::vector<double>>(j, "lines_hz"));
  merge(cfg.nu_a, file_value<double>(j, "nu_a"));
  merge(cfg.nu_b, file_value<double>(j, "nu_b"));
  merge(cfg.j, file_value<double>(j, "j"));
  merge(cfg.hamiltonian, file_value<std::string>(j, "hamiltonian"));
  if (!cfg.ansatz && j.contains("ansatz")) {
    const Json& a = j.at("ansatz");
    cfg.ansatz = a.is_string() ? a.get<std::string>() : a.dump();
  }
  merge(cfg.circuit, file_value<std::string>(j, "circuit"));
  merge(cfg.optimizer, file_value<std::string>(j, "optimizer"));
  merge(cfg.tol, file_value<double>(j, "tol"));
  merge(cfg.max_iter, file_value<int>(j, "max_iter"));
  merge(cfg.step_size, file_value<double>(j, "step_size"));
  merge(cfg.simplex_scale, file_value<double>(j, "simplex_scale"));
  merge(cfg.j_tolerance, file_value<double>(j, "j_tolerance"));
  merge(cfg.shots, file_value<std::uint64_t>(j, "shots"));
  merge(cfg.seed, file_value<std::uint64_t>(j, "seed"));
  merge(cfg.trace, file_value<std::string>(j, "trace"));
  merge(cfg.out, file_value<std::string>(j, "out"));
  merge(cfg.flag_threshold, file_value<double>(j, "flag_threshold"));
  if (cfg.references.empty() && j.contains("references")) {
    const Json& refs = j.at("references");
    if (!refs.is_object()) fail(ErrorKind::kUsage, "config: 'references' must be an object");
    for (const auto& [label, value] : refs.items()) {
      if (!value.is_number()) {
        fail(ErrorKind::kUsage, "config: reference '" + label + "' must be a number");
      }
      std::ostringstream entry;
      entry.precision(17);
      entry << label << '=' << value.get<double>();
      cfg.references.push_back(entry.str());
    }
  }
}

struct Problem {
  std::string system;
  PauliSum hamiltonian{1};
  std::optional<SpinSystemParams> params;
  std::optional<AnalyticSpectrum> analytic;
};

SpinSystemParams resolve_params(const RunConfig& cfg) {
  if (!cfg.system || cfg.system == "custom") {
    fail(ErrorKind::kUsage, "--system AB or AB2 is required with lines or explicit parameters");
  }
  const SystemKind kind = parse_system_kind(*cfg.system);
  if (cfg.lines) {
    const SpectrumLines lines{kind, *cfg.lines};
    if (kind == SystemKind::kAB) {
      AbExtractionOptions options;
      if (cfg.j_tolerance) options.j_consistency_tolerance = *cfg.j_tolerance;
      return extract_ab_params(lines, options);
    }
    return extract_ab2_params(lines);
  }
  if (!cfg.nu_a || !cfg.nu_b || !cfg.j) {
    fail(ErrorKind::kUsage, "explicit parameters need all of --nu-a, --nu-b and --j");
  }
  return kind == SystemKind::kAB ? make_ab_params(*cfg.nu_a, *cfg.nu_b, *cfg.j)
                                 : make_ab2_params(*cfg.nu_a, *cfg.nu_b, *cfg.j);
}

Problem resolve_problem(const RunConfig& cfg) {
  const bool has_params = cfg.nu_a || cfg.nu_b || cfg.j;
  const int sources =
      int{cfg.lines.has_value()} + int{has_params} + int{cfg.hamiltonian.has_value()};
  if (sources != 1) {
    fail(ErrorKind::kUsage,
         "supply exactly one of --lines, explicit parameters (--nu-a/--nu-b/--j) or "
         "--hamiltonian");
  }
  Problem problem;
  if (cfg.hamiltonian) {
    if (cfg.system && *cfg.system != "custom") {
      fail(ErrorKind::kUsage, "--hamiltonian implies --system custom");
    }
    problem.system = "custom";
    problem.hamiltonian = io::pauli_sum_from_json(io::read_json_file(*cfg.hamiltonian));
    return problem;
  }
  const SpinSystemParams p = resolve_params(cfg);
  problem.system = std::string(to_string(p.kind));
  problem.params = p;
  if (p.kind == SystemKind::kAB) {
    problem.hamiltonian = build_ab_hamiltonian(p);
    problem.analytic = ab_analytic_spectrum(p);
  } else {
    problem.hamiltonian = build_ab2_hamiltonian(p);
    problem.analytic = ab2_analytic_spectrum(p);
  }
  return problem;
}

OptimizerOptions resolve_optimizer(const RunConfig& cfg) {
  OptimizerOptions opts;
  if (cfg.optimizer) {
    if (*cfg.optimizer == "nelder-mead") {
      opts.method = OptimizerMethod::kNelderMead;
    } else if (*cfg.optimizer == "param-shift-gd") {
      opts.method = OptimizerMethod::kParamShiftGd;
    } else {
      fail(ErrorKind::kUsage, "unknown optimizer '" + *cfg.optimizer +
                                  "' (expected nelder-mead or param-shift-gd)");
    }
  }
  if (cfg.tol) opts.tolerance = *cfg.tol;
  if (cfg.max_iter) opts.max_iterations = *cfg.max_iter;
  if (cfg.step_size) opts.step_size = *cfg.step_size;
  if (cfg.simplex_scale) opts.simplex_scale = *cfg.simplex_scale;
  try {
    validate(opts);
  } catch (const Error& e) {
    fail(ErrorKind::kUsage, e.what());
  }
  return opts;
}

Measurement resolve_measurement(const RunConfig& cfg) {
  if (!cfg.shots) {
    if (cfg.seed) fail(ErrorKind::kUsage, "--seed only applies with --shots");
    return ExactMeasurement{};
  }
  if (*cfg.shots == 0) fail(ErrorKind::kUsage, "--shots must be at least 1");
  return ShotMeasurement{*cfg.shots, cfg.seed.value_or(0)};
}

// "ab_fig2", "ab2_fig4", "layered:L" or a JSON document.
Json ansatz_document(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      fail(ErrorKind::kUsage, "--ansatz: malformed JSON");
    }
  }
  constexpr std::string_view kLayered = "layered:";
  if (text.rfind(kLayered, 0) == 0) {
    try {
      return Json{{"layered", std::stoi(text.substr(kLayered.size()))}};
    } catch (const std::exception&) {
      fail(ErrorKind::kUsage, "--ansatz: layer count must be an integer");
    }
  }
  return text;
}

struct Variational {
  Circuit circuit;
  std::vector<double> initial;
};

Variational resolve_variational(const RunConfig& cfg, const Problem& problem) {
  if (cfg.circuit) {
    if (cfg.ansatz) fail(ErrorKind::kUsage, "--circuit and --ansatz are mutually exclusive");
    Circuit c = io::circuit_from_json(io::read_json_file(*cfg.circuit));
    std::vector<double> initial(c.free_parameter_count(), 1.0);
    return {std::move(c), std::move(initial)};
  }
  Json doc;
  if (cfg.ansatz) {
    doc = ansatz_document(*cfg.ansatz);
  } else if (problem.system == "AB") {
    doc = "ab_fig2";
  } else if (problem.system == "AB2") {
    doc = "ab2_fig4";
  } else {
    doc = Json{{"layered", 2}};
  }
  const AnsatzSpec spec = io::ansatz_from_json(doc, problem.hamiltonian.n_qubits());
  if (spec.n_qubits != problem.hamiltonian.n_qubits()) {
    fail(ErrorKind::kUsage, "ansatz acts on " + std::to_string(spec.n_qubits) +
                                " qubits but the hamiltonian on " +
                                std::to_string(problem.hamiltonian.n_qubits()));
  }
  return {build_ansatz(spec), spec.initial_angles};
}

void emit(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (cfg.out) {
    io::write_text_file(*cfg.out, text);
  } else {
    out << text;
  }
}

VqeResult run_vqe(const RunConfig& cfg, const Problem& problem) {
  const Variational v = resolve_variational(cfg, problem);
  VqeResult result = vqe_minimize(problem.hamiltonian, v.circuit, v.initial,
                                  resolve_optimizer(cfg), resolve_measurement(cfg));
  if (cfg.trace) {
    std::ostringstream csv;
    io::write_trace_csv(csv, result.trace);
    io::write_text_file(*cfg.trace, csv.str());
  }
  return result;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.lines) fail(ErrorKind::kUsage, "analyze needs --lines");
  if (cfg.hamiltonian || cfg.nu_a || cfg.nu_b || cfg.j) {
    fail(ErrorKind::kUsage, "analyze takes only --system and --lines");
  }
  emit(cfg, io::to_json(resolve_params(cfg)), out);
  return kExitOk;
}

int cmd_build_ham(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, io::to_json(resolve_problem(cfg).hamiltonian), out);
  return kExitOk;
}

int cmd_vqe(const RunConfig& cfg, std::ostream& out) {
  const Problem problem = resolve_problem(cfg);
  emit(cfg, io::to_json(run_vqe(cfg, problem), cfg.trace), out);
  return kExitOk;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const Problem problem = resolve_problem(cfg);
  const EigenSystem eig = eigensystem(to_dense_matrix(problem.hamiltonian));
  Json doc = {{"system", problem.system},
              {"ground_energy_hz", eig.values.front()},
              {"eigenvalues_hz", eig.values}};
  if (problem.analytic) doc["analytic_levels"] = io::to_json(*problem.analytic);
  emit(cfg, doc, out);
  return kExitOk;
}

std::pair<std::string, double> parse_reference(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    fail(ErrorKind::kUsage, "--reference expects label=value, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const std::string number = text.substr(eq + 1);
    const double value = std::stod(number, &used);
    if (used != number.size()) throw std::invalid_argument(number);
    return {text.substr(0, eq), value};
  } catch (const std::exception&) {
    fail(ErrorKind::kUsage, "--reference value is not a number in '" + text + "'");
  }
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const Problem problem = resolve_problem(cfg);
  const VqeResult vqe = run_vqe(cfg, problem);
  const double oracle = vqe.oracle_energy;
  const double threshold = cfg.flag_threshold.value_or(0.05);

  Json deltas = {{"vqe_minus_oracle_hz", vqe.ground_energy - oracle}};
  Json doc = {{"system", problem.system},
              {"vqe_energy_hz", vqe.ground_energy},
              {"oracle_energy_hz", oracle}};
  if (problem.analytic) {
    const double analytic = problem.analytic->levels.front().energy;
    doc["analytic_energy_hz"] = analytic;
    deltas["analytic_minus_oracle_hz"] = analytic - oracle;
  }
  doc["deltas_hz"] = deltas;

  Json refs = Json::array();
  for (const std::string& text : cfg.references) {
    const auto [label, value] = parse_reference(text);
    const double delta = value - oracle;
    refs.push_back({{"label", label},
                    {"value_hz", value},
                    {"delta_vs_oracle_hz", delta},
                    {"flagged", std::abs(delta) > threshold}});
  }
  doc["references"] = refs;
  doc["flag_threshold_hz"] = threshold;
  doc["theta"] = vqe.optimal_parameters;
  doc["iterations"] = vqe.trace.size();
  emit(cfg, doc, out);
  return kExitOk;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--config", cfg.config, "JSON run configuration; flags override its values");
  cmd->add_option("--system", cfg.system, "AB, AB2 or custom");
  cmd->add_option("--lines", cfg.lines, "Comma-separated line positions in Hz, descending")
      ->delimiter(',');
  cmd->add_option("--nu-a", cfg.nu_a, "Larmor frequency of A, Hz");
  cmd->add_option("--nu-b", cfg.nu_b, "Larmor frequency of B, Hz");
  cmd->add_option("--j", cfg.j, "A-B coupling, Hz");
  cmd->add_option("--j-tolerance", cfg.j_tolerance,
                  "Allowed disagreement of the two AB coupling estimates, Hz");
  cmd->add_option("--hamiltonian", cfg.hamiltonian, "Pauli-sum JSON file (custom system)");
  cmd->add_option("--out", cfg.out, "Write the JSON result here instead of stdout");
}

void add_vqe_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--ansatz", cfg.ansatz, "ab_fig2, ab2_fig4, layered:L or a JSON document");
  cmd->add_option("--circuit", cfg.circuit, "Circuit JSON file used instead of --ansatz");
  cmd->add_option("--optimizer", cfg.optimizer, "nelder-mead or param-shift-gd");
  cmd->add_option("--tol", cfg.tol, "Convergence tolerance");
  cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap");
  cmd->add_option("--step-size", cfg.step_size, "Gradient-descent step size");
  cmd->add_option("--simplex-scale", cfg.simplex_scale, "Initial simplex edge, radians");
  cmd->add_option("--shots", cfg.shots, "Estimate energies from this many shots per term");
  cmd->add_option("--seed", cfg.seed, "Seed for shot sampling");
  cmd->add_option("--trace", cfg.trace, "Write the per-iteration trace CSV here");
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInconsistentSpectrum:
    case ErrorKind::kMismatch:
      return kExitData;
    case ErrorKind::kNumerical:
      return kExitNumerical;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"NMR spin-system analysis and variational ground-state estimation"};
  app.name(args.empty() ? "nmrvqe" : args.front());
  app.require_subcommand(1);

  RunConfig cfg;
  CLI::App* analyze = app.add_subcommand("analyze", "Extract frequencies and coupling from lines");
  CLI::App* build = app.add_subcommand("build-ham", "Print the Pauli-sum hamiltonian");
  CLI::App* vqe = app.add_subcommand("vqe", "Run the variational eigensolver");
  CLI::App* exact = app.add_subcommand("exact", "Exact diagonalization");
  CLI::App* compare = app.add_subcommand("compare", "VQE vs exact vs analytic report");
  for (CLI::App* cmd : {analyze, build, vqe, exact, compare}) add_common_options(cmd, cfg);
  for (CLI::App* cmd : {vqe, compare}) add_vqe_options(cmd, cfg);
  compare->add_option("--reference", cfg.references,
                      "Reference energy label=value (Hz), repeatable");
  compare->add_option("--flag-threshold", cfg.flag_threshold,
                      "Flag references further than this from the oracle, Hz (default 0.05)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    apply_config_file(cfg);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (build->parsed()) return cmd_build_ham(cfg, out);
    if (vqe->parsed()) return cmd_vqe(cfg, out);
    if (exact->parsed()) return cmd_exact(cfg, out);
    return cmd_compare(cfg, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace nmrvqe::cli
