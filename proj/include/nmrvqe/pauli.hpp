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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nmrvqe/matrix.hpp"
#include "nmrvqe/statevector.hpp"

namespace nmrvqe {

enum class Pauli : std::uint8_t { kI, kX, kY, kZ };

char to_char(Pauli p);

/// Tensor product of single-qubit Paulis; factor 0 acts on qubit 0 (the
/// leftmost factor, nucleus A in the spin models).
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> factors);

  /// Parses "XZI"-style labels, one character per qubit. Throws
  /// ErrorKind::kValidation on an empty label or unknown character.
  static PauliString parse(std::string_view label);
  /// Identity everywhere except the listed (qubit, pauli) pairs.
  static PauliString on_qubits(int n_qubits,
                               std::initializer_list<std::pair<int, Pauli>> placed);

  int n_qubits() const noexcept { return static_cast<int>(factors_.size()); }
  Pauli operator[](int qubit) const { return factors_[qubit]; }
  const std::vector<Pauli>& factors() const noexcept { return factors_; }

  std::string label() const;
  bool is_identity() const noexcept { return flip_mask_ == 0 && phase_mask_ == 0; }

  /// Basis-index bits flipped by X and Y factors.
  std::uint64_t flip_mask() const noexcept { return flip_mask_; }
  /// Basis-index bits contributing a (-1)^bit sign (Z and Y factors).
  std::uint64_t phase_mask() const noexcept { return phase_mask_; }
  int y_count() const noexcept { return y_count_; }
  /// Bits whose Z-basis outcome enters the measured eigenvalue (non-identity).
  std::uint64_t support_mask() const noexcept { return flip_mask_ | phase_mask_; }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Pauli> factors_;
  std::uint64_t flip_mask_ = 0;
  std::uint64_t phase_mask_ = 0;
  int y_count_ = 0;
};

struct PauliTerm {
  double coeff;
  PauliString string;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Real-weighted sum of Pauli strings on a fixed register, in Hz.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Appends a term; throws ErrorKind::kDimension on a qubit-count mismatch.
  void add(double coeff, PauliString string);
  void add(double coeff, std::string_view label) { add(coeff, PauliString::parse(label)); }

  /// Sum of |coeff|, an upper bound on the spectral norm.
  double coefficient_norm() const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Largest register to_dense_matrix will expand.
inline constexpr int kMaxDenseQubits = 12;

/// P|s>, computed by bit-mask permutation with phases.
StateVector apply_pauli_string(const PauliString& p, const StateVector& s);

/// <s|P|s> without materialising P|s>.
Complex pauli_string_expectation(const PauliString& p, const StateVector& s);

/// Sum_i c_i <s|P_i|s>. Throws ErrorKind::kNormalization when |‖s‖² - 1| > 1e-9.
double expectation(const PauliSum& h, const StateVector& s);

/// Dense 2^n x 2^n expansion via explicit Kronecker products of the 2x2 factor
/// matrices. Throws ErrorKind::kCapacity above kMaxDenseQubits.
HermitianMatrix to_dense_matrix(const PauliSum& h);

}  // namespace nmrvqe
