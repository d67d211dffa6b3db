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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "nmrvqe/ansatz.hpp"
#include "nmrvqe/circuit.hpp"
#include "nmrvqe/nmr.hpp"
#include "nmrvqe/optimizer.hpp"
#include "nmrvqe/pauli.hpp"
#include "nmrvqe/vqe.hpp"

// Readers throw nmrvqe::Error with ErrorKind::kUsage on malformed documents.
namespace nmrvqe::io {

using Json = nlohmann::json;

/// {"n_qubits": 2, "terms": [{"coeff": -1.5, "paulis": "ZI"}, ...]}
Json to_json(const PauliSum& h);
PauliSum pauli_sum_from_json(const Json& j);

/// {"n_qubits": 2, "ops": [{"kind": "RY", "target": 0, "param": 0},
///                         {"kind": "CNOT", "control": 0, "target": 1}, ...]}
/// "param" names a free slot, "angle" a bound constant. The slot count is one
/// past the largest referenced slot.
Json to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

/// {"system": "AB", "lines_hz": [f1, f2, ...]}
SpectrumLines spectrum_from_json(const Json& j);
Json to_json(const SpectrumLines& lines);

Json to_json(const SpinSystemParams& p);
Json to_json(const AnalyticSpectrum& s);

/// "ab_fig2" | "ab2_fig4" | {"layered": L}; default starting angles.
AnsatzSpec ansatz_from_json(const Json& j, int n_qubits);
Json ansatz_layout_to_json(const AnsatzLayout& layout);

/// {"ground_energy_hz", "oracle_energy_hz", "gap_hz", "theta", "iterations",
///  "trace_csv"}; iterations equals the trace row count.
Json to_json(const VqeResult& r, const std::optional<std::string>& trace_path);

/// Header `iteration,evaluations,energy_hz,theta_0,...`, one row per entry.
void write_trace_csv(std::ostream& out, const OptimizationTrace& trace);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace nmrvqe::io
