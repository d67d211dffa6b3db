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

#include "nmrvqe/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "nmrvqe/error.hpp"
#include "rng.hpp"

namespace nmrvqe {

namespace {

void check_qubit(int qubit, int n_qubits, ErrorKind kind) {
  if (qubit < 0 || qubit >= n_qubits) {
    fail(kind, "qubit index " + std::to_string(qubit) + " out of range for " +
                   std::to_string(n_qubits) + " qubits");
  }
}

void check_gate_shape(const GateOp& g, int n_qubits, ErrorKind range_kind) {
  check_qubit(g.target, n_qubits, range_kind);
  if (g.is_controlled()) {
    if (!g.control) {
      fail(ErrorKind::kValidation, std::string(to_string(g.kind)) + " needs a control qubit");
    }
    check_qubit(*g.control, n_qubits, range_kind);
    if (*g.control == g.target) {
      fail(ErrorKind::kValidation, std::string(to_string(g.kind)) +
                                       " control and target must differ");
    }
  } else if (g.control) {
    fail(ErrorKind::kValidation, std::string(to_string(g.kind)) + " takes no control qubit");
  }
  if (!g.is_rotation() && (g.angle || g.param)) {
    fail(ErrorKind::kValidation, std::string(to_string(g.kind)) + " takes no angle");
  }
  if (g.is_rotation() && g.angle && g.param) {
    fail(ErrorKind::kValidation, "rotation has both a bound angle and a parameter slot");
  }
}

// Ry(theta) = [[cos, -sin], [sin, cos]] of theta/2 on the target, optionally
// restricted to basis states with the control bit set.
void rotate_y(std::span<Complex> amps, std::uint64_t target_mask, std::uint64_t control_mask,
              double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & target_mask) != 0 || (i & control_mask) != control_mask) continue;
    const std::uint64_t j = i | target_mask;
    const Complex a0 = amps[i];
    const Complex a1 = amps[j];
    amps[i] = c * a0 - s * a1;
    amps[j] = s * a0 + c * a1;
  }
}

void flip(std::span<Complex> amps, std::uint64_t target_mask, std::uint64_t control_mask) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & target_mask) != 0 || (i & control_mask) != control_mask) continue;
    std::swap(amps[i], amps[i | target_mask]);
  }
}

// Rotates the measurement basis so a Z-basis readout of `qubit` yields the
// eigenvalue of the Pauli factor: X via Ry(-pi/2), Y via H·S† = (1/√2)[[1, -i], [1, i]].
void rotate_to_z_basis(StateVector& s, int qubit, Pauli p) {
  const std::uint64_t mask = s.qubit_mask(qubit);
  auto amps = s.amplitudes();
  if (p == Pauli::kX) {
    rotate_y(amps, mask, 0, -std::numbers::pi / 2.0);
  } else if (p == Pauli::kY) {
    const double r = (1.0 / std::numbers::sqrt2);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
      if ((i & mask) != 0) continue;
      const Complex a0 = amps[i];
      const Complex a1 = amps[i | mask];
      const Complex ia1 = Complex(0.0, 1.0) * a1;
      amps[i] = r * (a0 - ia1);
      amps[i | mask] = r * (a0 + ia1);
    }
  }
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "X";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kRy: return "RY";
    case GateKind::kCry: return "CRY";
  }
  return "?";
}

Circuit::Circuit(int n_qubits, std::vector<GateOp> ops, std::size_t free_parameter_count)
    : n_qubits_(n_qubits), ops_(std::move(ops)), free_parameter_count_(free_parameter_count) {
  if (n_qubits < 1 || n_qubits > kMaxSimulatedQubits) {
    fail(ErrorKind::kValidation, "circuit qubit count out of range: " + std::to_string(n_qubits));
  }
  std::vector<bool> slot_used(free_parameter_count, false);
  for (const GateOp& g : ops_) {
    check_gate_shape(g, n_qubits, ErrorKind::kValidation);
    if (g.is_rotation() && !g.angle && !g.param) {
      fail(ErrorKind::kValidation, "rotation needs a bound angle or a parameter slot");
    }
    if (g.param) {
      if (*g.param >= free_parameter_count) {
        fail(ErrorKind::kValidation, "parameter slot " + std::to_string(*g.param) +
                                         " exceeds free parameter count " +
                                         std::to_string(free_parameter_count));
      }
      slot_used[*g.param] = true;
    }
  }
  const auto unused = std::find(slot_used.begin(), slot_used.end(), false);
  if (unused != slot_used.end()) {
    fail(ErrorKind::kValidation,
         "parameter slot " + std::to_string(unused - slot_used.begin()) + " is never used");
  }
}

void apply_gate_inplace(StateVector& s, const GateOp& g) {
  check_gate_shape(g, s.n_qubits(), ErrorKind::kDimension);
  const std::uint64_t target = s.qubit_mask(g.target);
  const std::uint64_t control = g.control ? s.qubit_mask(*g.control) : 0;
  switch (g.kind) {
    case GateKind::kX:
    case GateKind::kCnot:
      flip(s.amplitudes(), target, control);
      return;
    case GateKind::kRy:
    case GateKind::kCry:
      if (!g.angle) {
        fail(ErrorKind::kUsage, "rotation on qubit " + std::to_string(g.target) +
                                    " has an unbound parameter slot");
      }
      rotate_y(s.amplitudes(), target, control, *g.angle);
      return;
  }
}

StateVector apply_gate(const StateVector& s, const GateOp& g) {
  StateVector out = s;
  apply_gate_inplace(out, g);
  return out;
}

StateVector run_circuit(const Circuit& c, std::span<const double> theta, const StateVector& s0) {
  if (theta.size() != c.free_parameter_count()) {
    fail(ErrorKind::kArity, "circuit takes " + std::to_string(c.free_parameter_count()) +
                                " parameters, got " + std::to_string(theta.size()));
  }
  if (s0.n_qubits() != c.n_qubits()) {
    fail(ErrorKind::kDimension, "circuit acts on " + std::to_string(c.n_qubits()) +
                                    " qubits but state has " + std::to_string(s0.n_qubits()));
  }
  StateVector s = s0;
  for (const GateOp& g : c.ops()) {
    if (g.param) {
      GateOp bound = g;
      bound.angle = theta[*g.param];
      bound.param.reset();
      apply_gate_inplace(s, bound);
    } else {
      apply_gate_inplace(s, g);
    }
  }
  return s;
}

StateVector run_circuit(const Circuit& c, std::span<const double> theta) {
  return run_circuit(c, theta, init_basis_state(c.n_qubits(), 0));
}

SampledEstimate sample_expectation(const StateVector& s, const PauliSum& h, std::uint64_t shots,
                                   std::uint64_t seed) {
  if (shots == 0) fail(ErrorKind::kDomain, "shot count must be at least 1");
  if (h.n_qubits() != s.n_qubits()) {
    fail(ErrorKind::kDimension, "hamiltonian and state qubit counts differ");
  }
  SampledEstimate est;
  double variance = 0.0;
  std::vector<double> cdf(s.dimension());
  for (std::size_t t = 0; t < h.terms().size(); ++t) {
    const PauliTerm& term = h.terms()[t];
    if (term.string.is_identity()) {
      est.value += term.coeff;
      continue;
    }
    StateVector rotated = s;
    for (int q = 0; q < s.n_qubits(); ++q) rotate_to_z_basis(rotated, q, term.string[q]);

    double running = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
      running += std::norm(rotated[i]);
      cdf[i] = running;
    }

    const std::uint64_t support = term.string.support_mask();
    detail::CounterRng rng(seed, t);
    std::int64_t sum = 0;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
      const double u = rng.uniform() * running;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      if (it == cdf.end()) --it;
      const auto index = static_cast<std::uint64_t>(it - cdf.begin());
      sum += (std::popcount(index & support) & 1) ? -1 : 1;
    }
    const double n = static_cast<double>(shots);
    const double mean = static_cast<double>(sum) / n;
    double sample_var = std::max(0.0, 1.0 - mean * mean);
    if (shots > 1) sample_var *= n / (n - 1.0);
    est.value += term.coeff * mean;
    variance += term.coeff * term.coeff * sample_var / n;
  }
  est.standard_error = std::sqrt(variance);
  return est;
}

SampledEstimate sample_expectation(const Circuit& c, std::span<const double> theta,
                                   const PauliSum& h, std::uint64_t shots, std::uint64_t seed) {
  return sample_expectation(run_circuit(c, theta), h, shots, seed);
}

}  // namespace nmrvqe
