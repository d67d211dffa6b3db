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

#include "nmrvqe/ansatz.hpp"

#include <string>

#include "nmrvqe/error.hpp"

namespace nmrvqe {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_qubits(const AnsatzSpec& spec) {
  std::visit(Overloaded{
                 [&](AbLayout) {
                   if (spec.n_qubits != 2) {
                     fail(ErrorKind::kValidation, "AB ansatz needs 2 qubits, got " +
                                                      std::to_string(spec.n_qubits));
                   }
                 },
                 [&](Ab2Layout) {
                   if (spec.n_qubits != 3) {
                     fail(ErrorKind::kValidation, "AB2 ansatz needs 3 qubits, got " +
                                                      std::to_string(spec.n_qubits));
                   }
                 },
                 [&](LayeredLayout l) {
                   if (spec.n_qubits < 1) {
                     fail(ErrorKind::kValidation, "layered ansatz needs at least one qubit");
                   }
                   if (l.layers < 1) {
                     fail(ErrorKind::kValidation, "layered ansatz needs at least one layer");
                   }
                 },
             },
             spec.layout);
}

void append_ry_layer(std::vector<GateOp>& ops, int n_qubits, std::size_t& slot) {
  for (int q = 0; q < n_qubits; ++q) ops.push_back(GateOp::ry_param(q, slot++));
}

void append_cnot_chain(std::vector<GateOp>& ops, int n_qubits) {
  for (int q = 0; q + 1 < n_qubits; ++q) ops.push_back(GateOp::cnot(q, q + 1));
}

}  // namespace

AnsatzSpec AnsatzSpec::ab() {
  AnsatzSpec spec{2, AbLayout{}, {}};
  spec.initial_angles = default_initial_parameters(spec);
  return spec;
}

AnsatzSpec AnsatzSpec::ab2() {
  AnsatzSpec spec{3, Ab2Layout{}, {}};
  spec.initial_angles = default_initial_parameters(spec);
  return spec;
}

AnsatzSpec AnsatzSpec::layered(int n_qubits, int layers) {
  AnsatzSpec spec{n_qubits, LayeredLayout{layers}, {}};
  spec.initial_angles = default_initial_parameters(spec);
  return spec;
}

std::size_t parameter_count(const AnsatzLayout& layout, int n_qubits) {
  return std::visit(Overloaded{
                        [](AbLayout) -> std::size_t { return 4; },
                        [](Ab2Layout) -> std::size_t { return 6; },
                        [&](LayeredLayout l) -> std::size_t {
                          return static_cast<std::size_t>(l.layers) *
                                 static_cast<std::size_t>(n_qubits);
                        },
                    },
                    layout);
}

void validate(const AnsatzSpec& spec) {
  check_qubits(spec);
  const std::size_t expected = parameter_count(spec.layout, spec.n_qubits);
  if (spec.initial_angles.size() != expected) {
    fail(ErrorKind::kValidation, "ansatz takes " + std::to_string(expected) +
                                     " initial angles, got " +
                                     std::to_string(spec.initial_angles.size()));
  }
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  validate(spec);
  std::vector<GateOp> ops;
  std::size_t slot = 0;
  std::visit(Overloaded{
                 [&](AbLayout) {
                   append_ry_layer(ops, 2, slot);
                   append_cnot_chain(ops, 2);
                   append_ry_layer(ops, 2, slot);
                 },
                 [&](Ab2Layout) {
                   append_ry_layer(ops, 3, slot);
                   append_cnot_chain(ops, 3);
                   append_ry_layer(ops, 3, slot);
                 },
                 [&](LayeredLayout l) {
                   for (int layer = 0; layer < l.layers; ++layer) {
                     append_ry_layer(ops, spec.n_qubits, slot);
                     append_cnot_chain(ops, spec.n_qubits);
                   }
                 },
             },
             spec.layout);
  return Circuit(spec.n_qubits, std::move(ops), slot);
}

std::vector<double> default_initial_parameters(const AnsatzSpec& spec) {
  check_qubits(spec);
  return std::vector<double>(parameter_count(spec.layout, spec.n_qubits), 1.0);
}

}  // namespace nmrvqe
