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

#include "nmrvqe/statevector.hpp"

#include <cmath>
#include <string>

#include "nmrvqe/error.hpp"

namespace nmrvqe {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxSimulatedQubits) {
    fail(ErrorKind::kDomain, "qubit count must lie in [1, " +
                                 std::to_string(kMaxSimulatedQubits) + "], got " +
                                 std::to_string(n_qubits));
  }
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    fail(ErrorKind::kDimension, "state of " + std::to_string(n_qubits) + " qubits needs " +
                                    std::to_string(std::size_t{1} << n_qubits) +
                                    " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

bool StateVector::is_normalized(double tolerance) const {
  return std::abs(norm_squared() - 1.0) <= tolerance;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_) {
    fail(ErrorKind::kDimension, "inner product of states with different qubit counts");
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return acc;
}

StateVector init_basis_state(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (index >= dim) {
    fail(ErrorKind::kDomain, "basis index " + std::to_string(index) + " out of range for " +
                                 std::to_string(n_qubits) + " qubits");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(a.inner(b)); }

}  // namespace nmrvqe
