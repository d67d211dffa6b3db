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

#include "nmrvqe/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "nmrvqe/error.hpp"

namespace nmrvqe::io {

namespace {

template <class T>
T get_field(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::kUsage, std::string(context) + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kUsage, std::string(context) + ": field '" + key + "' has the wrong type");
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

GateKind parse_gate_kind(const std::string& text) {
  if (text == "X") return GateKind::kX;
  if (text == "CNOT") return GateKind::kCnot;
  if (text == "RY") return GateKind::kRy;
  if (text == "CRY") return GateKind::kCry;
  fail(ErrorKind::kUsage, "circuit: unknown gate kind '" + text + "'");
}

}  // namespace

Json to_json(const PauliSum& h) {
  Json terms = Json::array();
  for (const auto& t : h.terms()) {
    terms.push_back({{"coeff", t.coeff}, {"paulis", t.string.label()}});
  }
  return {{"n_qubits", h.n_qubits()}, {"terms", terms}};
}

PauliSum pauli_sum_from_json(const Json& j) {
  const int n = get_field<int>(j, "n_qubits", "hamiltonian");
  const Json terms = get_field<Json>(j, "terms", "hamiltonian");
  if (!terms.is_array()) fail(ErrorKind::kUsage, "hamiltonian: 'terms' must be an array");
  try {
    PauliSum h(n);
    for (const Json& t : terms) {
      const auto coeff = get_field<double>(t, "coeff", "hamiltonian term");
      const auto label = get_field<std::string>(t, "paulis", "hamiltonian term");
      h.add(coeff, PauliString::parse(label));
    }
    return h;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kUsage) throw;
    fail(ErrorKind::kUsage, std::string("hamiltonian: ") + e.what());
  }
}

Json to_json(const Circuit& c) {
  Json ops = Json::array();
  for (const GateOp& g : c.ops()) {
    Json op = {{"kind", std::string(to_string(g.kind))}, {"target", g.target}};
    if (g.control) op["control"] = *g.control;
    if (g.param) op["param"] = *g.param;
    if (g.angle) op["angle"] = *g.angle;
    ops.push_back(std::move(op));
  }
  return {{"n_qubits", c.n_qubits()}, {"ops", ops}};
}

Circuit circuit_from_json(const Json& j) {
  const int n = get_field<int>(j, "n_qubits", "circuit");
  const Json ops_json = get_field<Json>(j, "ops", "circuit");
  if (!ops_json.is_array()) fail(ErrorKind::kUsage, "circuit: 'ops' must be an array");
  std::vector<GateOp> ops;
  std::size_t slots = 0;
  for (const Json& o : ops_json) {
    GateOp g;
    g.kind = parse_gate_kind(get_field<std::string>(o, "kind", "circuit op"));
    g.target = get_field<int>(o, "target", "circuit op");
    if (o.contains("control")) g.control = get_field<int>(o, "control", "circuit op");
    if (o.contains("angle")) g.angle = get_field<double>(o, "angle", "circuit op");
    if (o.contains("param")) {
      const int slot = get_field<int>(o, "param", "circuit op");
      if (slot < 0) fail(ErrorKind::kUsage, "circuit op: 'param' must be non-negative");
      g.param = static_cast<std::size_t>(slot);
      slots = std::max(slots, *g.param + 1);
    }
    ops.push_back(g);
  }
  try {
    return Circuit(n, std::move(ops), slots);
  } catch (const Error& e) {
    fail(ErrorKind::kUsage, std::string("circuit: ") + e.what());
  }
}

SpectrumLines spectrum_from_json(const Json& j) {
  SpectrumLines lines;
  lines.kind = parse_system_kind(get_field<std::string>(j, "system", "spectrum"));
  lines.frequencies = get_field<std::vector<double>>(j, "lines_hz", "spectrum");
  return lines;
}

Json to_json(const SpectrumLines& lines) {
  return {{"system", std::string(to_string(lines.kind))}, {"lines_hz", lines.frequencies}};
}

Json to_json(const SpinSystemParams& p) {
  Json j = {{"kind", std::string(to_string(p.kind))},
            {"nu_a_hz", p.nu_a},
            {"nu_b_hz", p.nu_b},
            {"j_ab_hz", p.j_ab}};
  if (p.kind == SystemKind::kAB) {
    j["c_value_hz"] = optional_number(p.c_value);
    j["theta_mix_rad"] = optional_number(p.theta_mix);
  } else {
    j["c_plus_hz"] = optional_number(p.c_plus);
    j["c_minus_hz"] = optional_number(p.c_minus);
    j["theta_plus_rad"] = optional_number(p.theta_plus);
    j["theta_minus_rad"] = optional_number(p.theta_minus);
  }
  return j;
}

Json to_json(const AnalyticSpectrum& s) {
  Json levels = Json::array();
  for (const auto& level : s.levels) {
    levels.push_back({{"label", level.label}, {"energy_hz", level.energy}, {"state", level.state}});
  }
  return levels;
}

AnsatzSpec ansatz_from_json(const Json& j, int n_qubits) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "ab_fig2") return AnsatzSpec::ab();
    if (name == "ab2_fig4") return AnsatzSpec::ab2();
    fail(ErrorKind::kUsage, "unknown ansatz '" + name + "' (expected ab_fig2, ab2_fig4 or "
                            "{\"layered\": L})");
  }
  if (j.is_object() && j.contains("layered")) {
    const int layers = get_field<int>(j, "layered", "ansatz");
    try {
      return AnsatzSpec::layered(n_qubits, layers);
    } catch (const Error& e) {
      fail(ErrorKind::kUsage, std::string("ansatz: ") + e.what());
    }
  }
  fail(ErrorKind::kUsage, "ansatz must be \"ab_fig2\", \"ab2_fig4\" or {\"layered\": L}");
}

Json ansatz_layout_to_json(const AnsatzLayout& layout) {
  if (std::holds_alternative<AbLayout>(layout)) return "ab_fig2";
  if (std::holds_alternative<Ab2Layout>(layout)) return "ab2_fig4";
  return {{"layered", std::get<LayeredLayout>(layout).layers}};
}

Json to_json(const VqeResult& r, const std::optional<std::string>& trace_path) {
  return {{"ground_energy_hz", r.ground_energy},
          {"oracle_energy_hz", r.oracle_energy},
          {"gap_hz", r.absolute_gap},
          {"theta", r.optimal_parameters},
          {"iterations", r.trace.size()},
          {"evaluations", r.evaluations},
          {"converged", r.converged},
          {"trace_csv", trace_path ? Json(*trace_path) : Json(nullptr)}};
}

void write_trace_csv(std::ostream& out, const OptimizationTrace& trace) {
  const std::size_t p = trace.empty() ? 0 : trace.front().parameters.size();
  out << "iteration,evaluations,energy_hz";
  for (std::size_t i = 0; i < p; ++i) out << ",theta_" << i;
  out << '\n';
  std::ostringstream row;
  row.precision(17);
  for (const TraceEntry& e : trace) {
    row.str("");
    row << e.iteration << ',' << e.evaluations << ',' << e.best_objective;
    for (double t : e.parameters) row << ',' << t;
    out << row.str() << '\n';
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kUsage, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::kUsage, "malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kUsage, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace nmrvqe::io
