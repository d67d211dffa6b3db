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
#include <cstdint>
#include <span>
#include <vector>

#include "nmrvqe/matrix.hpp"

namespace nmrvqe {

/// Largest register the simulator will allocate.
inline constexpr int kMaxSimulatedQubits = 24;

/// Complex amplitudes over the 2^n computational basis states.
///
/// Qubit 0 is the leftmost tensor factor and maps to the most significant bit
/// of the basis index, so |01> (qubit 0 = 0, qubit 1 = 1) is index 1.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-10;

  /// Takes ownership of `amplitudes`; the length must be 2^n_qubits.
  /// Normalization is not enforced here; see is_normalized().
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_[index]; }

  double norm_squared() const;
  bool is_normalized(double tolerance = kNormTolerance) const;

  /// <this|other>
  Complex inner(const StateVector& other) const;

  /// Bit position of `qubit` inside a basis index.
  std::uint64_t qubit_mask(int qubit) const noexcept {
    return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
  }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// |index> on n qubits. Throws ErrorKind::kDomain for an out-of-range index.
StateVector init_basis_state(int n_qubits, std::uint64_t index);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace nmrvqe
