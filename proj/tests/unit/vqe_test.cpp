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

#include <gtest/gtest.h>

#include <random>

#include "nmrvqe/eigensolver.hpp"
#include "nmrvqe/error.hpp"
#include "nmrvqe/nmr.hpp"
#include "support/oracles.hpp"

namespace nmrvqe {
namespace {

double ground_fidelity(const PauliSum& h, const VqeResult& r, const Circuit& c) {
  const EigenSystem es = eigensystem(to_dense_matrix(h));
  const StateVector ground(h.n_qubits(), es.vectors.front());
  return fidelity(run_circuit(c, r.optimal_parameters), ground);
}

TEST(VqeMinimize, AbReachesOracle) {
  const PauliSum h = build_ab_hamiltonian(make_ab_params(2094.007, 2060.99, 1.64));
  const VqeResult r = vqe_minimize(h, AnsatzSpec::ab(), {});
  EXPECT_NEAR(r.oracle_energy, -2077.0885, 1e-4);
  EXPECT_NEAR(r.ground_energy, r.oracle_energy, 1e-3);
  EXPECT_EQ(r.absolute_gap, std::abs(r.ground_energy - r.oracle_energy));
  EXPECT_GE(ground_fidelity(h, r, build_ansatz(AnsatzSpec::ab())), 0.999);
  EXPECT_EQ(r.optimal_parameters.size(), 4u);
}

TEST(VqeMinimize, Ab2ReachesAnalytic) {
  const PauliSum h = build_ab2_hamiltonian(make_ab2_params(1492.6, 1481.84, 8.2));
  const VqeResult r = vqe_minimize(h, AnsatzSpec::ab2(), {});
  EXPECT_NEAR(r.ground_energy, -2224.04, 0.05);
  EXPECT_GE(ground_fidelity(h, r, build_ansatz(AnsatzSpec::ab2())), 0.999);
}

TEST(VqeMinimize, SingleZLayered) {
  PauliSum h(1);
  h.add(1.0, "Z");
  const VqeResult r = vqe_minimize(h, AnsatzSpec::layered(1, 1), {});
  EXPECT_NEAR(r.ground_energy, -1.0, 1e-8);
}

TEST(VqeMinimize, BitIdenticalReruns) {
  const PauliSum h = build_ab_hamiltonian(make_ab_params(120.0, 80.0, 12.0));
  const VqeResult a = vqe_minimize(h, AnsatzSpec::ab(), {});
  const VqeResult b = vqe_minimize(h, AnsatzSpec::ab(), {});
  EXPECT_EQ(a.ground_energy, b.ground_energy);
  EXPECT_EQ(a.optimal_parameters, b.optimal_parameters);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].best_objective, b.trace[i].best_objective);
  }
}

TEST(VqeMinimize, ShotsModeSeededDeterminism) {
  const PauliSum h = build_ab_hamiltonian(make_ab_params(120.0, 80.0, 12.0));
  OptimizerOptions opts;
  opts.max_iterations = 60;
  const ShotMeasurement shots{20000, 7};
  const VqeResult a = vqe_minimize(h, AnsatzSpec::ab(), opts, shots);
  const VqeResult b = vqe_minimize(h, AnsatzSpec::ab(), opts, shots);
  EXPECT_EQ(a.ground_energy, b.ground_energy);
  EXPECT_EQ(a.optimal_parameters, b.optimal_parameters);
}

TEST(VqeMinimize, Errors) {
  const PauliSum h = build_ab2_hamiltonian(make_ab2_params(10.0, 5.0, 1.0));
  EXPECT_THROW(vqe_minimize(h, AnsatzSpec::ab(), {}), Error);
  EXPECT_THROW(vqe_minimize(build_ab_hamiltonian(make_ab_params(10, 5, 1)), AnsatzSpec::ab(), {},
                            ShotMeasurement{0, 1}),
               Error);
}

TEST(VqeMinimize, VariationalBoundOnRandomHamiltonians) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const PauliSum h = testing::random_pauli_sum(n, 2 + trial % 5, rng, 10.0);
    OptimizerOptions opts;
    opts.max_iterations = 400;
    if (trial % 2) {
      opts.method = OptimizerMethod::kParamShiftGd;
      opts.step_size = 0.05;
    }
    const VqeResult r = vqe_minimize(h, AnsatzSpec::layered(n, 2), opts);
    // Oracle recomputed through the dense Hermitian path.
    const double oracle = eigensystem(to_dense_matrix(h)).values.front();
    const double floor = oracle - 1e-9 * std::abs(oracle);
    for (const TraceEntry& e : r.trace) EXPECT_GE(e.best_objective, floor);
  }
}

}  // namespace
}  // namespace nmrvqe
