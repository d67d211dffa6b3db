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

// Test-only reference computations. Nothing here calls the bit-mask paths of
// the library: gates and Pauli strings are expanded into explicit dense
// matrices and multiplied out.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "nmrvqe/circuit.hpp"
#include "nmrvqe/eigensolver.hpp"
#include "nmrvqe/pauli.hpp"
#include "nmrvqe/statevector.hpp"

namespace nmrvqe::testing {

using Dense = std::vector<std::vector<Complex>>;

inline Dense dense_identity(std::size_t n) {
  Dense m(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  Dense out(na * nb, std::vector<Complex>(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense out(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline std::vector<Complex> matvec(const Dense& a, std::span<const Complex> v) {
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline Dense pauli_matrix(Pauli p) {
  const Complex i(0.0, 1.0);
  switch (p) {
    case Pauli::kX: return {{0.0, 1.0}, {1.0, 0.0}};
    case Pauli::kY: return {{0.0, -i}, {i, 0.0}};
    case Pauli::kZ: return {{1.0, 0.0}, {0.0, -1.0}};
    case Pauli::kI: break;
  }
  return dense_identity(2);
}

inline Dense dense_pauli_string(const PauliString& p) {
  Dense acc = {{1.0}};
  for (Pauli f : p.factors()) acc = kron(acc, pauli_matrix(f));
  return acc;
}

inline Dense ry_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {{c, -s}, {s, c}};
}

// Single-qubit operator `u` placed on `qubit` of an n-qubit register.
inline Dense embed_single(const Dense& u, int qubit, int n) {
  Dense acc = {{1.0}};
  for (int q = 0; q < n; ++q) acc = kron(acc, q == qubit ? u : dense_identity(2));
  return acc;
}

// |0><0|_c ⊗ I + |1><1|_c ⊗ U_t
inline Dense embed_controlled(const Dense& u, int control, int target, int n) {
  const Dense p0 = {{1.0, 0.0}, {0.0, 0.0}};
  const Dense p1 = {{0.0, 0.0}, {0.0, 1.0}};
  Dense a = {{1.0}};
  Dense b = {{1.0}};
  for (int q = 0; q < n; ++q) {
    a = kron(a, q == control ? p0 : dense_identity(2));
    b = kron(b, q == control ? p1 : (q == target ? u : dense_identity(2)));
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  return a;
}

inline Dense dense_gate(const GateOp& g, double angle, int n) {
  switch (g.kind) {
    case GateKind::kX: return embed_single(pauli_matrix(Pauli::kX), g.target, n);
    case GateKind::kCnot: return embed_controlled(pauli_matrix(Pauli::kX), *g.control, g.target, n);
    case GateKind::kRy: return embed_single(ry_matrix(angle), g.target, n);
    case GateKind::kCry: return embed_controlled(ry_matrix(angle), *g.control, g.target, n);
  }
  return dense_identity(std::size_t{1} << n);
}

inline Dense dense_circuit(const Circuit& c, std::span<const double> theta) {
  const int n = c.n_qubits();
  Dense u = dense_identity(std::size_t{1} << n);
  for (const GateOp& g : c.ops()) {
    const double angle = g.param ? theta[*g.param] : g.angle.value_or(0.0);
    u = matmul(dense_gate(g, angle, n), u);
  }
  return u;
}

inline double dense_expectation(const PauliSum& h, std::span<const Complex> s) {
  const std::size_t dim = s.size();
  std::vector<Complex> hs(dim);
  for (const auto& t : h.terms()) {
    const auto ps = matvec(dense_pauli_string(t.string), s);
    for (std::size_t i = 0; i < dim; ++i) hs[i] += t.coeff * ps[i];
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) acc += std::conj(s[i]) * hs[i];
  return acc.real();
}

// Random generators for property tests.

inline StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {normal(rng), normal(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(n, std::move(amps));
}

inline PauliString random_pauli_string(int n, std::mt19937_64& rng, bool allow_identity = true) {
  std::uniform_int_distribution<int> pick(0, 3);
  while (true) {
    std::vector<Pauli> f(static_cast<std::size_t>(n));
    for (auto& p : f) p = static_cast<Pauli>(pick(rng));
    PauliString s(std::move(f));
    if (allow_identity || !s.is_identity()) return s;
  }
}

inline PauliSum random_pauli_sum(int n, int terms, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> coeff(-scale, scale);
  PauliSum h(n);
  for (int t = 0; t < terms; ++t) h.add(coeff(rng), random_pauli_string(n, rng));
  return h;
}

// Random circuit over the four-gate set with `params` free slots, each used
// by exactly one Ry. CRY gates carry bound angles so the two-point shift
// rule stays exact.
inline Circuit random_circuit(int n, std::size_t params, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qubit(0, n - 1);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<GateOp> ops;
  auto other = [&](int q) {
    int r = qubit(rng);
    while (n > 1 && r == q) r = qubit(rng);
    return r;
  };
  for (std::size_t slot = 0; slot < params; ++slot) {
    const int t = qubit(rng);
    ops.push_back(GateOp::ry_param(t, slot));
    if (n > 1 && (rng() & 1)) ops.push_back(GateOp::cry(other(t), t, angle(rng)));
    if (n > 1 && (rng() % 3 == 0)) {
      const int c = qubit(rng);
      ops.push_back(GateOp::cnot(c, other(c)));
    }
    if (rng() % 4 == 0) ops.push_back(GateOp::x(qubit(rng)));
    if (rng() % 4 == 0) ops.push_back(GateOp::ry(qubit(rng), angle(rng)));
  }
  return Circuit(n, std::move(ops), params);
}

// Random Hermitian matrix with entries uniform in [-scale, scale].
inline HermitianMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng, double scale = 1.0,
                                        bool real_only = false) {
  std::uniform_real_distribution<double> u(-scale, scale);
  HermitianMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m.add(r, r, u(rng));
    for (std::size_t c = r + 1; c < dim; ++c) {
      m.add(r, c, Complex(u(rng), real_only ? 0.0 : u(rng)));
    }
  }
  return m;
}

// Three-spin A-B-B Hamiltonian assembled from Kronecker products.
inline Dense dense_ab2_hamiltonian(double nu_a, double nu_b, double j) {
  Dense h(8, std::vector<Complex>(8, 0.0));
  auto accumulate = [&](double coeff, const char* label) {
    const Dense p = dense_pauli_string(PauliString::parse(label));
    for (std::size_t r = 0; r < 8; ++r) {
      for (std::size_t c = 0; c < 8; ++c) h[r][c] += coeff * p[r][c];
    }
  };
  accumulate(-nu_a / 2, "ZII");
  accumulate(-nu_b / 2, "IZI");
  accumulate(-nu_b / 2, "IIZ");
  for (const char* label : {"XXI", "YYI", "ZZI", "XIX", "YIY", "ZIZ"}) accumulate(j / 4, label);
  return h;
}

// Observable lines of the three-spin system: |dE| between eigenstates with
// weight |<f|Fx|i>|^2, Fx = sum X/2. Degenerate frequencies are merged, the
// weakest (combination) line is dropped and the remaining eight are returned
// in descending order.
inline std::vector<double> synthetic_ab2_lines(double nu_a, double nu_b, double j) {
  const Dense h = dense_ab2_hamiltonian(nu_a, nu_b, j);
  std::vector<Complex> flat;
  for (const auto& row : h) flat.insert(flat.end(), row.begin(), row.end());
  const EigenSystem es = eigensystem(HermitianMatrix::from_entries(8, flat));
  Dense fx(8, std::vector<Complex>(8, 0.0));
  for (const char* label : {"XII", "IXI", "IIX"}) {
    const Dense p = dense_pauli_string(PauliString::parse(label));
    for (std::size_t r = 0; r < 8; ++r) {
      for (std::size_t c = 0; c < 8; ++c) fx[r][c] += 0.5 * p[r][c];
    }
  }
  std::vector<std::pair<double, double>> lines;  // frequency, intensity
  for (std::size_t a = 0; a < 8; ++a) {
    const std::vector<Complex> fa = matvec(fx, es.vectors[a]);
    for (std::size_t b = a + 1; b < 8; ++b) {
      Complex amp = 0.0;
      for (std::size_t k = 0; k < 8; ++k) amp += std::conj(es.vectors[b][k]) * fa[k];
      const double intensity = std::norm(amp);
      if (intensity < 1e-9) continue;
      const double freq = std::abs(es.values[b] - es.values[a]);
      auto it = std::find_if(lines.begin(), lines.end(),
                             [&](const auto& l) { return std::abs(l.first - freq) < 1e-7; });
      if (it == lines.end()) {
        lines.emplace_back(freq, intensity);
      } else {
        it->second += intensity;
      }
    }
  }
  std::sort(lines.begin(), lines.end(), [](auto x, auto y) { return x.second > y.second; });
  if (lines.size() > 8) lines.resize(8);
  std::vector<double> out;
  for (const auto& l : lines) out.push_back(l.first);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace nmrvqe::testing
