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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nmrvqe/pauli.hpp"
#include "nmrvqe/statevector.hpp"

namespace nmrvqe {

enum class GateKind { kX, kCnot, kRy, kCry };

std::string_view to_string(GateKind kind);

/// One gate application. Rotations carry either a bound angle (radians) or a
/// free-parameter slot that run_circuit binds.
struct GateOp {
  GateKind kind = GateKind::kX;
  int target = 0;
  std::optional<int> control;
  std::optional<double> angle;
  std::optional<std::size_t> param;

  static GateOp x(int target) { return {GateKind::kX, target, {}, {}, {}}; }
  static GateOp cnot(int control, int target) { return {GateKind::kCnot, target, control, {}, {}}; }
  static GateOp ry(int target, double angle) { return {GateKind::kRy, target, {}, angle, {}}; }
  static GateOp ry_param(int target, std::size_t slot) {
    return {GateKind::kRy, target, {}, {}, slot};
  }
  static GateOp cry(int control, int target, double angle) {
    return {GateKind::kCry, target, control, angle, {}};
  }
  static GateOp cry_param(int control, int target, std::size_t slot) {
    return {GateKind::kCry, target, control, {}, slot};
  }

  bool is_rotation() const noexcept { return kind == GateKind::kRy || kind == GateKind::kCry; }
  bool is_controlled() const noexcept {
    return kind == GateKind::kCnot || kind == GateKind::kCry;
  }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Ordered gate list over a fixed register with `free_parameter_count` slots.
/// Construction validates qubit indices and that every slot below the count
/// is referenced at least once (ErrorKind::kValidation otherwise).
class Circuit {
 public:
  Circuit(int n_qubits, std::vector<GateOp> ops, std::size_t free_parameter_count);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  std::size_t free_parameter_count() const noexcept { return free_parameter_count_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_qubits_;
  std::vector<GateOp> ops_;
  std::size_t free_parameter_count_;
};

/// Applies one gate. Throws ErrorKind::kUsage for a rotation whose angle is an
/// unbound parameter slot, ErrorKind::kDimension for out-of-range qubits.
StateVector apply_gate(const StateVector& s, const GateOp& g);

/// In-place variant used by run_circuit.
void apply_gate_inplace(StateVector& s, const GateOp& g);

/// U(theta)|s0>. Throws ErrorKind::kArity when theta does not match the slot count.
StateVector run_circuit(const Circuit& c, std::span<const double> theta, const StateVector& s0);

/// run_circuit from |0...0>.
StateVector run_circuit(const Circuit& c, std::span<const double> theta);

struct SampledEstimate {
  double value = 0.0;
  /// Empirical standard error of `value`.
  double standard_error = 0.0;
};

/// Shot-based estimate of <s|h|s>: each term is measured in its own rotated
/// basis with `shots` samples drawn from |amplitude|^2. Term t uses the random
/// stream (seed, t), so results are reproducible bit for bit.
SampledEstimate sample_expectation(const StateVector& s, const PauliSum& h, std::uint64_t shots,
                                   std::uint64_t seed);

SampledEstimate sample_expectation(const Circuit& c, std::span<const double> theta,
                                   const PauliSum& h, std::uint64_t shots, std::uint64_t seed);

}  // namespace nmrvqe
