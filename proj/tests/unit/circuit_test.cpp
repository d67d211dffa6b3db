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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "nmrvqe/ansatz.hpp"
#include "nmrvqe/error.hpp"
#include "support/oracles.hpp"

namespace nmrvqe {
namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kValidation;
}

TEST(InitBasisState, Examples) {
  const StateVector two = init_basis_state(2, 0);
  EXPECT_EQ(two.dimension(), 4u);
  EXPECT_EQ(two[0], Complex(1.0));
  EXPECT_EQ(init_basis_state(3, 0)[0], Complex(1.0));
  const StateVector one = init_basis_state(1, 1);
  EXPECT_EQ(one[0], Complex(0.0));
  EXPECT_EQ(one[1], Complex(1.0));
  EXPECT_EQ(kind_of([] { init_basis_state(2, 4); }), ErrorKind::kDomain);
}

TEST(ApplyGate, RyPiFlipsZero) {
  const StateVector out = apply_gate(init_basis_state(1, 0), GateOp::ry(0, kPi));
  EXPECT_NEAR(std::abs(out[0]), 0.0, 1e-15);
  EXPECT_NEAR(out[1].real(), 1.0, 1e-15);
}

TEST(ApplyGate, CnotOnOneZero) {
  const StateVector out = apply_gate(init_basis_state(2, 0b10), GateOp::cnot(0, 1));
  EXPECT_EQ(out[0b11], Complex(1.0));
}

TEST(ApplyGate, CryWithControlUnsetIsIdentity) {
  const StateVector out = apply_gate(init_basis_state(2, 0), GateOp::cry(0, 1, kPi / 2));
  EXPECT_EQ(out[0], Complex(1.0));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(out[i], Complex(0.0));
}

TEST(ApplyGate, UnboundSlotIsUsageError) {
  EXPECT_EQ(kind_of([] { apply_gate(init_basis_state(1, 0), GateOp::ry_param(0, 0)); }),
            ErrorKind::kUsage);
}

TEST(ApplyGate, OutOfRangeQubit) {
  EXPECT_EQ(kind_of([] { apply_gate(init_basis_state(2, 0), GateOp::x(2)); }),
            ErrorKind::kDimension);
}

TEST(ApplyGate, PreservesNormAndInvolutions) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const StateVector s = testing::random_state(n, rng);
    const int a = static_cast<int>(rng() % n);
    const int b = (a + 1 + static_cast<int>(rng() % (n - 1))) % n;
    for (const GateOp& g : {GateOp::x(a), GateOp::cnot(a, b), GateOp::ry(a, angle(rng)),
                            GateOp::cry(a, b, angle(rng))}) {
      EXPECT_NEAR(apply_gate(s, g).norm_squared(), 1.0, 1e-12);
    }
    for (const GateOp& g : {GateOp::x(a), GateOp::cnot(a, b)}) {
      const StateVector twice = apply_gate(apply_gate(s, g), g);
      for (std::size_t i = 0; i < s.dimension(); ++i) {
        ASSERT_NEAR(std::abs(twice[i] - s[i]), 0.0, 1e-12);
      }
    }
    const double t1 = angle(rng), t2 = angle(rng);
    const StateVector split = apply_gate(apply_gate(s, GateOp::ry(a, t1)), GateOp::ry(a, t2));
    const StateVector joined = apply_gate(s, GateOp::ry(a, t1 + t2));
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      ASSERT_NEAR(std::abs(split[i] - joined[i]), 0.0, 1e-12);
    }
  }
}

TEST(RunCircuit, EmptyCircuitIsIdentity) {
  const Circuit c(2, {}, 0);
  const StateVector out = run_circuit(c, {}, init_basis_state(2, 0));
  EXPECT_EQ(out[0], Complex(1.0));
}

TEST(RunCircuit, FullTurnGivesMinusOne) {
  const Circuit c(1, {GateOp::ry_param(0, 0)}, 1);
  const double theta[] = {2 * kPi};
  const StateVector out = run_circuit(c, theta, init_basis_state(1, 0));
  // Oracle: the 2x2 rotation matrix at 2π is −I.
  const auto dense =
      testing::matvec(testing::ry_matrix(2 * kPi), init_basis_state(1, 0).amplitudes());
  EXPECT_NEAR(std::abs(out[0] - dense[0]), 0.0, 1e-15);
  EXPECT_NEAR(out[0].real(), -1.0, 1e-15);
  EXPECT_NEAR(std::abs(out[1]), 0.0, 1e-15);
}

TEST(RunCircuit, ArityMismatch) {
  const Circuit c(1, {GateOp::ry_param(0, 0)}, 1);
  EXPECT_EQ(kind_of([&] { run_circuit(c, std::vector<double>{1.0, 2.0}); }), ErrorKind::kArity);
}

TEST(RunCircuit, MatchesDenseCircuitProduct) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const std::size_t params = 1 + trial % 6;
    const Circuit c = testing::random_circuit(n, params, rng);
    std::vector<double> theta(params);
    for (double& t : theta) t = angle(rng);
    const StateVector s0 = testing::random_state(n, rng);
    const StateVector fast = run_circuit(c, theta, s0);
    const auto dense = testing::matvec(testing::dense_circuit(c, theta), s0.amplitudes());
    for (std::size_t i = 0; i < s0.dimension(); ++i) {
      ASSERT_NEAR(std::abs(fast[i] - dense[i]), 0.0, 1e-10);
    }
  }
}

TEST(Circuit, ValidatesSlotsAndQubits) {
  EXPECT_EQ(kind_of([] { Circuit(2, {GateOp::ry_param(0, 1)}, 1); }), ErrorKind::kValidation);
  EXPECT_EQ(kind_of([] { Circuit(2, {GateOp::ry_param(0, 0)}, 2); }), ErrorKind::kValidation);
  EXPECT_EQ(kind_of([] { Circuit(2, {GateOp::cnot(1, 1)}, 0); }), ErrorKind::kValidation);
  EXPECT_EQ(kind_of([] { Circuit(2, {GateOp::x(5)}, 0); }), ErrorKind::kValidation);
}

TEST(SampleExpectation, DeterministicOutcome) {
  PauliSum z(1);
  z.add(1.0, "Z");
  const Circuit identity(1, {}, 0);
  for (std::uint64_t shots : {1u, 10u, 1000u}) {
    EXPECT_EQ(sample_expectation(identity, {}, z, shots, 3).value, 1.0);
  }
}

TEST(SampleExpectation, XOnZeroAveragesToZero) {
  PauliSum x(1);
  x.add(1.0, "X");
  const Circuit identity(1, {}, 0);
  const std::uint64_t shots = 200000;
  const SampledEstimate est = sample_expectation(identity, {}, x, shots, 17);
  EXPECT_LE(std::abs(est.value), 2.0 / std::sqrt(static_cast<double>(shots)));
}

TEST(SampleExpectation, ZeroShotsIsDomainError) {
  PauliSum z(1);
  z.add(1.0, "Z");
  EXPECT_EQ(kind_of([&] { sample_expectation(init_basis_state(1, 0), z, 0, 1); }),
            ErrorKind::kDomain);
}

TEST(SampleExpectation, BasisRotationsMatchEigenvalues) {
  // Eigenstates of X and Y prepared with bound gates; every shot must agree.
  PauliSum x(1), y(1);
  x.add(1.0, "X");
  y.add(1.0, "Y");
  const StateVector plus = apply_gate(init_basis_state(1, 0), GateOp::ry(0, kPi / 2));
  EXPECT_EQ(sample_expectation(plus, x, 500, 1).value, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector plus_i(1, {Complex(r), Complex(0.0, r)});
  const StateVector minus_i(1, {Complex(r), Complex(0.0, -r)});
  EXPECT_EQ(sample_expectation(plus_i, y, 500, 1).value, 1.0);
  EXPECT_EQ(sample_expectation(minus_i, y, 500, 1).value, -1.0);
}

TEST(SampleExpectation, SameSeedSameBits) {
  std::mt19937_64 rng(2);
  const PauliSum h = testing::random_pauli_sum(3, 6, rng, 4.0);
  const StateVector s = testing::random_state(3, rng);
  const SampledEstimate a = sample_expectation(s, h, 5000, 99);
  const SampledEstimate b = sample_expectation(s, h, 5000, 99);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.standard_error, b.standard_error);
  EXPECT_NE(sample_expectation(s, h, 5000, 100).value, a.value);
}

TEST(SampleExpectation, AbAnsatzWithinThreeSigma) {
  PauliSum h(2);
  h.add(-2094.007 / 2, "ZI");
  h.add(-2060.99 / 2, "IZ");
  for (const char* label : {"XX", "YY", "ZZ"}) h.add(1.64 / 4, label);
  const Circuit c = build_ansatz(AnsatzSpec::ab());
  // Superposed state so every term has non-zero variance.
  const std::vector<double> theta = {0.3, 1.1, -0.4, 0.7};
  const double exact = expectation(h, run_circuit(c, theta));
  const SampledEstimate est = sample_expectation(c, theta, h, 1'000'000, 2024);
  EXPECT_GT(est.standard_error, 0.0);
  EXPECT_LE(std::abs(est.value - exact), 3.0 * est.standard_error);
}

}  // namespace
}  // namespace nmrvqe
