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

#include <cstddef>
#include <variant>
#include <vector>

#include "nmrvqe/circuit.hpp"

namespace nmrvqe {

/// Two-qubit AB trial state: Ry layer, CNOT(0->1), Ry layer (4 parameters).
struct AbLayout {
  friend bool operator==(AbLayout, AbLayout) = default;
};
/// Three-qubit AB2 trial state: Ry layer, CNOT(0->1), CNOT(1->2), Ry layer (6 parameters).
struct Ab2Layout {
  friend bool operator==(Ab2Layout, Ab2Layout) = default;
};
/// `layers` repetitions of [Ry on every qubit, CNOT chain i -> i+1].
struct LayeredLayout {
  int layers = 1;
  friend bool operator==(LayeredLayout, LayeredLayout) = default;
};

using AnsatzLayout = std::variant<AbLayout, Ab2Layout, LayeredLayout>;

struct AnsatzSpec {
  int n_qubits = 2;
  AnsatzLayout layout = AbLayout{};
  std::vector<double> initial_angles;

  /// Specs with the default starting angles filled in.
  static AnsatzSpec ab();
  static AnsatzSpec ab2();
  static AnsatzSpec layered(int n_qubits, int layers);

  friend bool operator==(const AnsatzSpec&, const AnsatzSpec&) = default;
};

/// Free parameters the layout needs on `n_qubits` qubits.
std::size_t parameter_count(const AnsatzLayout& layout, int n_qubits);

/// Throws ErrorKind::kValidation if the qubit count or angle count does not
/// fit the layout.
void validate(const AnsatzSpec& spec);

Circuit build_ansatz(const AnsatzSpec& spec);

/// 1.0 rad for every free parameter.
std::vector<double> default_initial_parameters(const AnsatzSpec& spec);

}  // namespace nmrvqe
