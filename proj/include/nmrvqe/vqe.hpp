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
#include <span>
#include <variant>
#include <vector>

#include "nmrvqe/ansatz.hpp"
#include "nmrvqe/circuit.hpp"
#include "nmrvqe/optimizer.hpp"
#include "nmrvqe/pauli.hpp"

namespace nmrvqe {

struct ExactMeasurement {};

/// Shot-sampled energies. Every evaluation reuses `seed`, so the objective
/// stays a deterministic function of θ.
struct ShotMeasurement {
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
};

using Measurement = std::variant<ExactMeasurement, ShotMeasurement>;

struct VqeResult {
  double ground_energy = 0.0;
  std::vector<double> optimal_parameters;
  OptimizationTrace trace;
  double oracle_energy = 0.0;
  double absolute_gap = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Relative slack allowed below the oracle energy before an exact-mode run is
/// treated as a convention error.
inline constexpr double kVariationalSlack = 1e-9;

/// Runs the bind → prepare → measure → update loop from |0...0>.
///
/// The exact ground energy of `h` is always computed alongside. In exact mode
/// any trace energy below oracle − 1e-9·|oracle| raises ErrorKind::kNumerical.
VqeResult vqe_minimize(const PauliSum& h, const AnsatzSpec& spec, const OptimizerOptions& opts,
                       const Measurement& measurement = ExactMeasurement{});

/// Same loop over an arbitrary parametrized circuit.
VqeResult vqe_minimize(const PauliSum& h, const Circuit& circuit,
                       std::span<const double> initial_parameters, const OptimizerOptions& opts,
                       const Measurement& measurement = ExactMeasurement{});

/// E(θ) for the given measurement mode.
double vqe_energy(const PauliSum& h, const Circuit& circuit, std::span<const double> theta,
                  const Measurement& measurement = ExactMeasurement{});

}  // namespace nmrvqe
