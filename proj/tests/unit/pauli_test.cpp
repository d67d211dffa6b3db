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

#include "nmrvqe/pauli.hpp"

#include <gtest/gtest.h>

#include <random>

#include "nmrvqe/error.hpp"
#include "support/oracles.hpp"

namespace nmrvqe {
namespace {

using testing::dense_expectation;
using testing::dense_pauli_string;
using testing::matvec;

// Two-spin Zeeman + isotropic coupling, written out term by term.
PauliSum ab_hamiltonian(double nu_a, double nu_b, double j) {
  PauliSum h(2);
  h.add(-nu_a / 2.0, "ZI");
  h.add(-nu_b / 2.0, "IZ");
  h.add(j / 4.0, "XX");
  h.add(j / 4.0, "YY");
  h.add(j / 4.0, "ZZ");
  return h;
}

TEST(PauliString, ParseAndMasks) {
  const PauliString p = PauliString::parse("XYZI");
  EXPECT_EQ(p.n_qubits(), 4);
  EXPECT_EQ(p.label(), "XYZI");
  // Qubit 0 is the most significant bit.
  EXPECT_EQ(p.flip_mask(), 0b1100u);
  EXPECT_EQ(p.phase_mask(), 0b0110u);
  EXPECT_EQ(p.y_count(), 1);
  EXPECT_FALSE(p.is_identity());
  EXPECT_TRUE(PauliString::parse("II").is_identity());
}

TEST(PauliString, RejectsBadLabels) {
  EXPECT_THROW(PauliString::parse(""), Error);
  EXPECT_THROW(PauliString::parse("XQ"), Error);
  EXPECT_THROW(PauliString::parse("xz"), Error);
}

TEST(ApplyPauliString, ZOnGroundIsIdentity) {
  const StateVector out = apply_pauli_string(PauliString::parse("ZI"), init_basis_state(2, 0));
  EXPECT_EQ(out[0], Complex(1.0));
}

TEST(ApplyPauliString, DoubleFlip) {
  const StateVector out = apply_pauli_string(PauliString::parse("XX"), init_basis_state(2, 0));
  EXPECT_EQ(out[3], Complex(1.0));
  EXPECT_EQ(std::abs(out[0]), 0.0);
}

TEST(ApplyPauliString, YYOnOneGivesPlusOneZero) {
  const StateVector s = init_basis_state(2, 1);  // |01>
  const StateVector out = apply_pauli_string(PauliString::parse("YY"), s);
  const auto dense = matvec(dense_pauli_string(PauliString::parse("YY")), s.amplitudes());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(out[i] - dense[i]), 0.0, 1e-15);
  EXPECT_NEAR(out[2].real(), 1.0, 1e-15);  // +|10>
  EXPECT_NEAR(out[2].imag(), 0.0, 1e-15);
}

TEST(ApplyPauliString, QubitCountMismatch) {
  try {
    apply_pauli_string(PauliString::parse("ZZZ"), init_basis_state(2, 0));
    FAIL() << "expected a dimension error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimension);
  }
}

TEST(ApplyPauliString, MatchesDenseAndIsInvolutive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const StateVector s = testing::random_state(n, rng);
    const PauliString p = testing::random_pauli_string(n, rng);
    const StateVector once = apply_pauli_string(p, s);
    const auto dense = matvec(dense_pauli_string(p), s.amplitudes());
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      ASSERT_NEAR(std::abs(once[i] - dense[i]), 0.0, 1e-12) << p.label();
    }
    EXPECT_NEAR(std::sqrt(once.norm_squared()), 1.0, 1e-12);
    const StateVector twice = apply_pauli_string(p, once);
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      ASSERT_NEAR(std::abs(twice[i] - s[i]), 0.0, 1e-12);
    }
  }
}

TEST(Expectation, AbHamiltonianOnGround) {
  const PauliSum h = ab_hamiltonian(2094.007, 2060.99, 1.64);
  const double value = expectation(h, init_basis_state(2, 0));
  // Oracle: (0,0) entry of the dense matrix.
  EXPECT_NEAR(value, to_dense_matrix(h)(0, 0).real(), 1e-9);
  EXPECT_NEAR(value, -2077.0885, 1e-9);
}

TEST(Expectation, SingleZOnOne) {
  PauliSum h(1);
  h.add(1.0, "Z");
  EXPECT_DOUBLE_EQ(expectation(h, init_basis_state(1, 1)), -1.0);
}

TEST(Expectation, Ab2HamiltonianOnGround) {
  const double nu_a = 1492.6, nu_b = 1481.84, j = 8.2;
  PauliSum h(3);
  h.add(-nu_a / 2.0, "ZII");
  h.add(-nu_b / 2.0, "IZI");
  h.add(-nu_b / 2.0, "IIZ");
  for (const char* label : {"XXI", "YYI", "ZZI", "XIX", "YIY", "ZIZ"}) h.add(j / 4.0, label);
  EXPECT_NEAR(expectation(h, init_basis_state(3, 0)), -2224.04, 1e-9);
}

TEST(Expectation, RejectsUnnormalizedState) {
  PauliSum h(1);
  h.add(1.0, "Z");
  const StateVector s(1, {Complex(1.0), Complex(0.1)});
  try {
    expectation(h, s);
    FAIL() << "expected a normalization error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNormalization);
  }
}

TEST(Expectation, MatchesDenseQuadraticForm) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 4;
    const PauliSum h = testing::random_pauli_sum(n, 1 + trial % 10, rng, 50.0);
    const StateVector s = testing::random_state(n, rng);
    const double fast = expectation(h, s);
    const double dense = dense_expectation(h, s.amplitudes());
    EXPECT_NEAR(fast, dense, 1e-9 * std::max(1.0, std::abs(dense)));
    // Real coefficients: the full quadratic form has no imaginary part.
    Complex total = 0.0;
    for (const auto& t : h.terms()) total += t.coeff * pauli_string_expectation(t.string, s);
    EXPECT_LT(std::abs(total.imag()), 1e-10 * std::max(1.0, h.coefficient_norm()));
  }
}

TEST(ToDenseMatrix, ReproducesTwoSpinMatrix) {
  const double nu_a = 2094.007, nu_b = 2060.99, j = 1.64;
  const HermitianMatrix m = to_dense_matrix(ab_hamiltonian(nu_a, nu_b, j));
  const double expected_diag[] = {-(nu_a + nu_b) / 2 + j / 4, -(nu_a - nu_b) / 2 - j / 4,
                                  (nu_a - nu_b) / 2 - j / 4, (nu_a + nu_b) / 2 + j / 4};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      double expected = 0.0;
      if (r == c) expected = expected_diag[r];
      if ((r == 1 && c == 2) || (r == 2 && c == 1)) expected = j / 2;
      EXPECT_NEAR(std::abs(m(r, c) - Complex(expected)), 0.0, 1e-12) << r << "," << c;
    }
  }
}

TEST(ToDenseMatrix, EmptySumIsZero) {
  const HermitianMatrix m = to_dense_matrix(PauliSum(2));
  for (const Complex& z : m.entries()) EXPECT_EQ(z, Complex(0.0));
}

TEST(ToDenseMatrix, XXIsAntiDiagonal) {
  PauliSum h(2);
  h.add(1.0, "XX");
  const HermitianMatrix m = to_dense_matrix(h);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(m(r, c), Complex(r + c == 3 ? 1.0 : 0.0));
  }
}

TEST(ToDenseMatrix, CapacityLimit) {
  PauliSum h(kMaxDenseQubits + 1);
  try {
    to_dense_matrix(h);
    FAIL() << "expected a capacity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapacity);
  }
}

TEST(ToDenseMatrix, HermitianForRandomSums) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const HermitianMatrix m = to_dense_matrix(testing::random_pauli_sum(n, 8, rng, 10.0));
    for (std::size_t r = 0; r < m.dimension(); ++r) {
      for (std::size_t c = 0; c < m.dimension(); ++c) {
        EXPECT_LE(std::abs(m(r, c) - std::conj(m(c, r))), 1e-12);
      }
    }
  }
}

TEST(PauliSum, RejectsMismatchedTerm) {
  PauliSum h(2);
  EXPECT_THROW(h.add(1.0, "ZZZ"), Error);
}

}  // namespace
}  // namespace nmrvqe
