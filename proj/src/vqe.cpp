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

#include "nmrvqe/vqe.hpp"

#include <cmath>
#include <sstream>

#include "nmrvqe/eigensolver.hpp"
#include "nmrvqe/error.hpp"

namespace nmrvqe {

double vqe_energy(const PauliSum& h, const Circuit& circuit, std::span<const double> theta,
                  const Measurement& measurement) {
  const StateVector state = run_circuit(circuit, theta);
  if (const auto* shots = std::get_if<ShotMeasurement>(&measurement)) {
    return sample_expectation(state, h, shots->shots, shots->seed).value;
  }
  return expectation(h, state);
}

VqeResult vqe_minimize(const PauliSum& h, const Circuit& circuit,
                       std::span<const double> initial_parameters, const OptimizerOptions& opts,
                       const Measurement& measurement) {
  if (h.n_qubits() != circuit.n_qubits()) {
    std::ostringstream msg;
    msg << "hamiltonian acts on " << h.n_qubits() << " qubits but the ansatz has "
        << circuit.n_qubits();
    fail(ErrorKind::kValidation, msg.str());
  }
  if (initial_parameters.size() != circuit.free_parameter_count()) {
    fail(ErrorKind::kValidation, "initial parameter count does not match the circuit");
  }
  if (const auto* shots = std::get_if<ShotMeasurement>(&measurement); shots && shots->shots == 0) {
    fail(ErrorKind::kDomain, "shot count must be at least 1");
  }

  VqeResult result;
  result.oracle_energy = ground_energy(h);

  const Objective objective = [&](std::span<const double> theta) {
    return vqe_energy(h, circuit, theta, measurement);
  };
  OptimizationResult opt = minimize(objective, initial_parameters, opts);

  if (std::holds_alternative<ExactMeasurement>(measurement)) {
    const double floor =
        result.oracle_energy - kVariationalSlack * std::abs(result.oracle_energy);
    for (const TraceEntry& entry : opt.trace) {
      if (entry.best_objective < floor) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "variational bound violated at iteration " << entry.iteration << ": energy "
            << entry.best_objective << " Hz below exact ground energy " << result.oracle_energy
            << " Hz";
        fail(ErrorKind::kNumerical, msg.str());
      }
    }
  }

  result.ground_energy = opt.value;
  result.optimal_parameters = std::move(opt.theta);
  result.trace = std::move(opt.trace);
  result.absolute_gap = std::abs(result.ground_energy - result.oracle_energy);
  result.evaluations = opt.evaluations;
  result.converged = opt.converged;
  return result;
}

VqeResult vqe_minimize(const PauliSum& h, const AnsatzSpec& spec, const OptimizerOptions& opts,
                       const Measurement& measurement) {
  const Circuit circuit = build_ansatz(spec);
  return vqe_minimize(h, circuit, spec.initial_angles, opts, measurement);
}

}  // namespace nmrvqe
