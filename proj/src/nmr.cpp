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

#include "nmrvqe/nmr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nmrvqe/error.hpp"

namespace nmrvqe {

namespace {

constexpr double kInvSqrt2 = (1.0 / std::numbers::sqrt2);

void require_kind(const SpinSystemParams& p, SystemKind kind, std::string_view what) {
  if (p.kind != kind) {
    fail(ErrorKind::kValidation,
         std::string(what) + " needs " + std::string(to_string(kind)) + " parameters");
  }
}

// Lower/upper eigenvectors of mean·I + [[−d/2, b], [b, d/2]] in a two-state
// basis (u, w), with θ = ½·atan2(2b, d):
//   mean − c  ->  cosθ·u − sinθ·w
//   mean + c  ->  sinθ·u + cosθ·w
struct MixedPair {
  double lower_u, lower_w, upper_u, upper_w;
};

MixedPair mixed_pair(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

std::vector<double> basis_vector(std::size_t dim,
                                 std::initializer_list<std::pair<std::size_t, double>> entries) {
  std::vector<double> v(dim, 0.0);
  for (const auto& [index, value] : entries) v[index] += value;
  return v;
}

std::vector<double> combine(double a, const std::vector<double>& u, double b,
                            const std::vector<double>& w) {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] + b * w[i];
  return out;
}

AnalyticSpectrum sorted(std::vector<AnalyticLevel> levels) {
  std::stable_sort(levels.begin(), levels.end(),
                   [](const AnalyticLevel& a, const AnalyticLevel& b) {
                     return a.energy < b.energy;
                   });
  return AnalyticSpectrum{std::move(levels)};
}

}  // namespace

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::kAB: return "AB";
    case SystemKind::kAB2: return "AB2";
  }
  return "?";
}

SystemKind parse_system_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  if (upper == "AB") return SystemKind::kAB;
  if (upper == "AB2") return SystemKind::kAB2;
  fail(ErrorKind::kUsage, "unknown spin system '" + std::string(text) + "' (expected AB or AB2)");
}

std::size_t line_count(SystemKind kind) { return kind == SystemKind::kAB ? 4 : 8; }

void validate(const SpectrumLines& lines) {
  const std::size_t expected = line_count(lines.kind);
  if (lines.frequencies.size() != expected) {
    std::ostringstream msg;
    msg << to_string(lines.kind) << " spectrum needs " << expected << " lines, got "
        << lines.frequencies.size();
    fail(ErrorKind::kValidation, msg.str());
  }
  for (std::size_t i = 0; i < expected; ++i) {
    if (!std::isfinite(lines.frequencies[i])) {
      fail(ErrorKind::kValidation, "line f" + std::to_string(i + 1) + " is not finite");
    }
    if (i > 0 && lines.frequencies[i] > lines.frequencies[i - 1]) {
      std::ostringstream msg;
      msg << "lines must be in descending order: f" << i << " = " << lines.frequencies[i - 1]
          << " < f" << i + 1 << " = " << lines.frequencies[i];
      fail(ErrorKind::kValidation, msg.str());
    }
  }
}

SpinSystemParams make_ab_params(double nu_a, double nu_b, double j_ab) {
  SpinSystemParams p;
  p.kind = SystemKind::kAB;
  p.nu_a = nu_a;
  p.nu_b = nu_b;
  p.j_ab = j_ab;
  p.c_value = 0.5 * std::hypot(j_ab, nu_a - nu_b);
  if (nu_a != nu_b || j_ab != 0.0) p.theta_mix = ab_mixing_angle(p);
  return p;
}

SpinSystemParams make_ab2_params(double nu_a, double nu_b, double j_ab) {
  SpinSystemParams p;
  p.kind = SystemKind::kAB2;
  p.nu_a = nu_a;
  p.nu_b = nu_b;
  p.j_ab = j_ab;
  const double d_plus = nu_a - nu_b - j_ab / 2.0;
  const double d_minus = nu_a - nu_b + j_ab / 2.0;
  const double coupling = std::numbers::sqrt2 * j_ab;
  p.c_plus = 0.5 * std::sqrt(d_plus * d_plus + 2.0 * j_ab * j_ab);
  p.c_minus = 0.5 * std::sqrt(d_minus * d_minus + 2.0 * j_ab * j_ab);
  p.theta_plus = 0.5 * std::atan2(coupling, d_plus);
  p.theta_minus = 0.5 * std::atan2(coupling, d_minus);
  return p;
}

SpinSystemParams extract_ab_params(const SpectrumLines& lines, const AbExtractionOptions& options) {
  if (lines.kind != SystemKind::kAB) {
    fail(ErrorKind::kValidation, "AB extraction given an AB2 spectrum");
  }
  validate(lines);
  const auto& f = lines.frequencies;
  const double j_upper = f[0] - f[1];
  const double j_lower = f[2] - f[3];
  if (std::abs(j_upper - j_lower) > options.j_consistency_tolerance) {
    std::ostringstream msg;
    msg << "J estimates disagree: f1 - f2 = " << j_upper << " Hz, f3 - f4 = " << j_lower
        << " Hz (tolerance " << options.j_consistency_tolerance << " Hz)";
    fail(ErrorKind::kMismatch, msg.str());
  }
  const double j = 0.5 * (j_upper + j_lower);
  const double c = 0.25 * ((f[0] - f[2]) + (f[1] - f[3]));
  const double discriminant = 4.0 * c * c - j * j;
  if (discriminant < 0.0) {
    std::ostringstream msg;
    msg << "inconsistent AB spectrum: 4C^2 - J^2 = " << discriminant << " < 0 (C = " << c
        << " Hz, J = " << j << " Hz)";
    fail(ErrorKind::kInconsistentSpectrum, msg.str());
  }
  const double sum = f[0] + f[3];
  const double difference = std::sqrt(discriminant);
  return make_ab_params(0.5 * (sum + difference), 0.5 * (sum - difference), j);
}

double ab_mixing_angle(const SpinSystemParams& p) {
  const double delta = p.nu_a - p.nu_b;
  if (delta == 0.0 && p.j_ab == 0.0) {
    fail(ErrorKind::kDomain, "mixing angle undefined for equal frequencies without coupling");
  }
  return 0.5 * std::atan2(p.j_ab, delta);
}

SpectrumLines ab_forward_lines(const SpinSystemParams& p) {
  const double center = 0.5 * (p.nu_a + p.nu_b);
  const double c = 0.5 * std::hypot(p.j_ab, p.nu_a - p.nu_b);
  const double half_j = 0.5 * p.j_ab;
  return SpectrumLines{SystemKind::kAB,
                       {center + c + half_j, center + c - half_j, center - c + half_j,
                        center - c - half_j}};
}

SpinSystemParams extract_ab2_params(const SpectrumLines& lines) {
  if (lines.kind != SystemKind::kAB2) {
    fail(ErrorKind::kValidation, "AB2 extraction given an AB spectrum");
  }
  validate(lines);
  const auto& f = lines.frequencies;
  const double nu_a = f[2];
  const double nu_b = 0.5 * (f[4] + f[6]);
  const double j = ((f[0] - f[3]) + (f[5] - f[7])) / 3.0;
  return make_ab2_params(nu_a, nu_b, j);
}

PauliSum build_general_hamiltonian(std::span<const double> nus, const RealMatrix& couplings) {
  const std::size_t n = nus.size();
  if (n == 0) fail(ErrorKind::kValidation, "hamiltonian needs at least one spin");
  if (couplings.rows() != n || couplings.cols() != n) {
    fail(ErrorKind::kValidation, "coupling matrix must be " + std::to_string(n) + "x" +
                                     std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (couplings(i, i) != 0.0) {
      fail(ErrorKind::kValidation, "coupling matrix diagonal must be zero");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = couplings(i, j);
      const double b = couplings(j, i);
      if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) {
        std::ostringstream msg;
        msg << "coupling matrix is not symmetric at (" << i << ", " << j << "): " << a << " vs "
            << b;
        fail(ErrorKind::kValidation, msg.str());
      }
    }
  }

  const int qubits = static_cast<int>(n);
  PauliSum h(qubits);
  for (std::size_t i = 0; i < n; ++i) {
    if (nus[i] == 0.0) continue;
    h.add(-nus[i] / 2.0, PauliString::on_qubits(qubits, {{static_cast<int>(i), Pauli::kZ}}));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double coupling = couplings(i, j);
      if (coupling == 0.0) continue;
      for (Pauli p : {Pauli::kX, Pauli::kY, Pauli::kZ}) {
        h.add(coupling / 4.0, PauliString::on_qubits(
                                  qubits, {{static_cast<int>(i), p}, {static_cast<int>(j), p}}));
      }
    }
  }
  return h;
}

PauliSum build_ab_hamiltonian(const SpinSystemParams& p) {
  require_kind(p, SystemKind::kAB, "AB hamiltonian");
  const double nus[] = {p.nu_a, p.nu_b};
  RealMatrix couplings(2, 2);
  couplings(0, 1) = couplings(1, 0) = p.j_ab;
  return build_general_hamiltonian(nus, couplings);
}

PauliSum build_ab2_hamiltonian(const SpinSystemParams& p) {
  require_kind(p, SystemKind::kAB2, "AB2 hamiltonian");
  const double nus[] = {p.nu_a, p.nu_b, p.nu_b};
  RealMatrix couplings(3, 3);
  couplings(0, 1) = couplings(1, 0) = p.j_ab;
  couplings(0, 2) = couplings(2, 0) = p.j_ab;
  return build_general_hamiltonian(nus, couplings);
}

AnalyticSpectrum ab_analytic_spectrum(const SpinSystemParams& p) {
  require_kind(p, SystemKind::kAB, "AB analytic spectrum");
  const double sum = p.nu_a + p.nu_b;
  const double j = p.j_ab;
  const double c = 0.5 * std::hypot(j, p.nu_a - p.nu_b);
  const double theta = (p.nu_a != p.nu_b || j != 0.0) ? ab_mixing_angle(p) : 0.0;

  const auto ab = basis_vector(4, {{1, 1.0}});
  const auto ba = basis_vector(4, {{2, 1.0}});
  const MixedPair mix = mixed_pair(theta);

  std::vector<AnalyticLevel> levels;
  levels.push_back({"aa", -0.5 * sum + j / 4.0, basis_vector(4, {{0, 1.0}})});
  levels.push_back({"mixed-", -j / 4.0 - c, combine(mix.lower_u, ab, mix.lower_w, ba)});
  levels.push_back({"mixed+", -j / 4.0 + c, combine(mix.upper_u, ab, mix.upper_w, ba)});
  levels.push_back({"bb", 0.5 * sum + j / 4.0, basis_vector(4, {{3, 1.0}})});
  return sorted(std::move(levels));
}

AnalyticSpectrum ab2_analytic_spectrum(const SpinSystemParams& p) {
  require_kind(p, SystemKind::kAB2, "AB2 analytic spectrum");
  const SpinSystemParams q = make_ab2_params(p.nu_a, p.nu_b, p.j_ab);
  const double nu_a = q.nu_a;
  const double nu_b = q.nu_b;
  const double j = q.j_ab;

  const auto s1 = basis_vector(8, {{1, kInvSqrt2}, {2, kInvSqrt2}});
  const auto a1 = basis_vector(8, {{1, kInvSqrt2}, {2, -kInvSqrt2}});
  const auto s2 = basis_vector(8, {{5, kInvSqrt2}, {6, kInvSqrt2}});
  const auto a2 = basis_vector(8, {{5, kInvSqrt2}, {6, -kInvSqrt2}});
  const auto baa = basis_vector(8, {{4, 1.0}});
  const auto abb = basis_vector(8, {{3, 1.0}});

  // m_T = 1/2 block in (S1, |100>) and m_T = -1/2 block in (|011>, S2).
  const MixedPair plus = mixed_pair(*q.theta_plus);
  const MixedPair minus = mixed_pair(*q.theta_minus);
  const double mean_plus = 0.5 * (-nu_b - j / 2.0);
  const double mean_minus = 0.5 * (nu_b - j / 2.0);

  std::vector<AnalyticLevel> levels;
  levels.push_back({"aaa", -nu_a / 2.0 - nu_b + j / 2.0, basis_vector(8, {{0, 1.0}})});
  levels.push_back({"+1/2 mixed-", mean_plus - *q.c_plus,
                    combine(plus.lower_u, s1, plus.lower_w, baa)});
  levels.push_back({"+1/2 mixed+", mean_plus + *q.c_plus,
                    combine(plus.upper_u, s1, plus.upper_w, baa)});
  levels.push_back({"+1/2 antisymmetric", -nu_a / 2.0, a1});
  levels.push_back({"-1/2 mixed-", mean_minus - *q.c_minus,
                    combine(minus.lower_u, abb, minus.lower_w, s2)});
  levels.push_back({"-1/2 mixed+", mean_minus + *q.c_minus,
                    combine(minus.upper_u, abb, minus.upper_w, s2)});
  levels.push_back({"-1/2 antisymmetric", nu_a / 2.0, a2});
  levels.push_back({"bbb", nu_a / 2.0 + nu_b + j / 2.0, basis_vector(8, {{7, 1.0}})});
  return sorted(std::move(levels));
}

RealMatrix ab2_symmetrized_basis() {
  RealMatrix u(8, 8);
  u(0, 0) = 1.0;
  u(1, 1) = kInvSqrt2;
  u(1, 2) = -kInvSqrt2;
  u(2, 1) = kInvSqrt2;
  u(2, 2) = kInvSqrt2;
  u(3, 4) = 1.0;
  u(4, 3) = 1.0;
  u(5, 5) = kInvSqrt2;
  u(5, 6) = kInvSqrt2;
  u(6, 5) = kInvSqrt2;
  u(6, 6) = -kInvSqrt2;
  u(7, 7) = 1.0;
  return u;
}

HermitianMatrix ab2_symmetrized_matrix(const SpinSystemParams& p) {
  const HermitianMatrix h = to_dense_matrix(build_ab2_hamiltonian(p));
  const RealMatrix u = ab2_symmetrized_basis();
  constexpr std::size_t n = 8;
  std::vector<Complex> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (u(r, k) == 0.0) continue;
        for (std::size_t l = 0; l < n; ++l) acc += u(r, k) * h(k, l) * u(c, l);
      }
      out[r * n + c] = acc;
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    out[r * n + r] = out[r * n + r].real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (out[r * n + c] + std::conj(out[c * n + r]));
      out[r * n + c] = avg;
      out[c * n + r] = std::conj(avg);
    }
  }
  return HermitianMatrix::from_entries(n, std::move(out));
}

}  // namespace nmrvqe
