# Copyright 2026 The nmrvqe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""NMR spin-system analysis and variational ground-state estimation."""

from ._nmrvqe import (
    Circuit,
    NmrVqeError,
    PauliSum,
    StateVector,
    ab_forward_lines,
    analytic_spectrum,
    basis_state,
    build_ansatz,
    build_hamiltonian,
    eigenvalues,
    expectation,
    extract_params,
    fidelity,
    ground_energy,
    run_circuit,
    sample_expectation,
    vqe,
)

__all__ = [
    "Circuit",
    "NmrVqeError",
    "PauliSum",
    "StateVector",
    "ab_forward_lines",
    "analytic_spectrum",
    "basis_state",
    "build_ansatz",
    "build_hamiltonian",
    "eigenvalues",
    "expectation",
    "extract_params",
    "fidelity",
    "ground_energy",
    "run_circuit",
    "sample_expectation",
    "vqe",
]

__version__ = "0.1.0"
