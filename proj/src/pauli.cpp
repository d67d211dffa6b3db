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

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "nmrvqe/error.hpp"

namespace nmrvqe {

namespace {

constexpr double kExpectationNormTolerance = 1e-9;

// i^k for k mod 4.
Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

using Mat2 = std::array<Complex, 4>;

Mat2 factor_matrix(Pauli p) {
  switch (p) {
    case Pauli::kI: return {1.0, 0.0, 0.0, 1.0};
    case Pauli::kX: return {0.0, 1.0, 1.0, 0.0};
    case Pauli::kY: return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
    case Pauli::kZ: return {1.0, 0.0, 0.0, -1.0};
  }
  return {};
}

// Row-major Kronecker product of the factor matrices, leftmost factor first.
std::vector<Complex> kron_string(const PauliString& p) {
  std::vector<Complex> acc{1.0};
  std::size_t dim = 1;
  for (Pauli f : p.factors()) {
    const Mat2 m = factor_matrix(f);
    const std::size_t next_dim = dim * 2;
    std::vector<Complex> next(next_dim * next_dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        const Complex a = acc[r * dim + c];
        if (a == Complex{}) continue;
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 0; j < 2; ++j) {
            next[(2 * r + i) * next_dim + (2 * c + j)] = a * m[2 * i + j];
          }
        }
      }
    }
    acc = std::move(next);
    dim = next_dim;
  }
  return acc;
}

void check_same_register(const PauliString& p, const StateVector& s) {
  if (p.n_qubits() != s.n_qubits()) {
    fail(ErrorKind::kDimension, "pauli string acts on " + std::to_string(p.n_qubits()) +
                                    " qubits but state has " + std::to_string(s.n_qubits()));
  }
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::kI: return 'I';
    case Pauli::kX: return 'X';
    case Pauli::kY: return 'Y';
    case Pauli::kZ: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<Pauli> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) fail(ErrorKind::kValidation, "pauli string needs at least one qubit");
  if (factors_.size() > 63) fail(ErrorKind::kCapacity, "pauli string longer than 63 qubits");
  const int n = n_qubits();
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    switch (factors_[q]) {
      case Pauli::kI: break;
      case Pauli::kX: flip_mask_ |= bit; break;
      case Pauli::kY:
        flip_mask_ |= bit;
        phase_mask_ |= bit;
        ++y_count_;
        break;
      case Pauli::kZ: phase_mask_ |= bit; break;
    }
  }
}

PauliString PauliString::parse(std::string_view label) {
  std::vector<Pauli> factors;
  factors.reserve(label.size());
  for (char ch : label) {
    switch (ch) {
      case 'I': factors.push_back(Pauli::kI); break;
      case 'X': factors.push_back(Pauli::kX); break;
      case 'Y': factors.push_back(Pauli::kY); break;
      case 'Z': factors.push_back(Pauli::kZ); break;
      default:
        fail(ErrorKind::kValidation,
             "invalid pauli label '" + std::string(label) + "': unexpected '" + ch + "'");
    }
  }
  return PauliString(std::move(factors));
}

PauliString PauliString::on_qubits(int n_qubits,
                                   std::initializer_list<std::pair<int, Pauli>> placed) {
  if (n_qubits < 1) fail(ErrorKind::kValidation, "pauli string needs at least one qubit");
  std::vector<Pauli> factors(static_cast<std::size_t>(n_qubits), Pauli::kI);
  for (const auto& [qubit, pauli] : placed) {
    if (qubit < 0 || qubit >= n_qubits) {
      fail(ErrorKind::kValidation, "qubit index " + std::to_string(qubit) + " out of range");
    }
    factors[static_cast<std::size_t>(qubit)] = pauli;
  }
  return PauliString(std::move(factors));
}

std::string PauliString::label() const {
  std::string out;
  out.reserve(factors_.size());
  for (Pauli f : factors_) out.push_back(to_char(f));
  return out;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) fail(ErrorKind::kValidation, "pauli sum needs at least one qubit");
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms) : PauliSum(n_qubits) {
  terms_.reserve(terms.size());
  for (auto& t : terms) add(t.coeff, std::move(t.string));
}

void PauliSum::add(double coeff, PauliString string) {
  if (string.n_qubits() != n_qubits_) {
    fail(ErrorKind::kDimension, "term " + string.label() + " does not act on " +
                                    std::to_string(n_qubits_) + " qubits");
  }
  if (!std::isfinite(coeff)) {
    fail(ErrorKind::kValidation, "non-finite coefficient on term " + string.label());
  }
  terms_.push_back({coeff, std::move(string)});
}

double PauliSum::coefficient_norm() const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += std::abs(t.coeff);
  return sum;
}

StateVector apply_pauli_string(const PauliString& p, const StateVector& s) {
  check_same_register(p, s);
  const auto in = s.amplitudes();
  std::vector<Complex> out(in.size());
  const Complex global = i_power(p.y_count());
  const std::uint64_t flip = p.flip_mask();
  const std::uint64_t phase = p.phase_mask();
  for (std::uint64_t i = 0; i < in.size(); ++i) {
    const double sign = (std::popcount(i & phase) & 1) ? -1.0 : 1.0;
    out[i ^ flip] = global * sign * in[i];
  }
  return StateVector(s.n_qubits(), std::move(out));
}

Complex pauli_string_expectation(const PauliString& p, const StateVector& s) {
  check_same_register(p, s);
  const auto amps = s.amplitudes();
  const std::uint64_t flip = p.flip_mask();
  const std::uint64_t phase = p.phase_mask();
  Complex acc = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double sign = (std::popcount(i & phase) & 1) ? -1.0 : 1.0;
    acc += std::conj(amps[i ^ flip]) * (sign * amps[i]);
  }
  return acc * i_power(p.y_count());
}

double expectation(const PauliSum& h, const StateVector& s) {
  if (h.n_qubits() != s.n_qubits()) {
    fail(ErrorKind::kDimension, "hamiltonian acts on " + std::to_string(h.n_qubits()) +
                                    " qubits but state has " + std::to_string(s.n_qubits()));
  }
  const double norm2 = s.norm_squared();
  if (std::abs(norm2 - 1.0) > kExpectationNormTolerance) {
    fail(ErrorKind::kNormalization,
         "expectation requires a normalized state, got norm^2 = " + std::to_string(norm2));
  }
  double total = 0.0;
  for (const auto& term : h.terms()) {
    total += term.coeff * pauli_string_expectation(term.string, s).real();
  }
  return total;
}

HermitianMatrix to_dense_matrix(const PauliSum& h) {
  if (h.n_qubits() > kMaxDenseQubits) {
    fail(ErrorKind::kCapacity, "dense expansion limited to " + std::to_string(kMaxDenseQubits) +
                                   " qubits, got " + std::to_string(h.n_qubits()));
  }
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  std::vector<Complex> dense(dim * dim);
  for (const auto& term : h.terms()) {
    const std::vector<Complex> m = kron_string(term.string);
    for (std::size_t k = 0; k < dense.size(); ++k) dense[k] += term.coeff * m[k];
  }
  return HermitianMatrix::from_entries(dim, std::move(dense));
}

}  // namespace nmrvqe
