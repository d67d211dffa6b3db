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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmrvqe/matrix.hpp"
#include "nmrvqe/pauli.hpp"

namespace nmrvqe {

enum class SystemKind { kAB, kAB2 };

std::string_view to_string(SystemKind kind);
/// Accepts "AB" / "AB2" (case-insensitive); throws ErrorKind::kUsage otherwise.
SystemKind parse_system_kind(std::string_view text);

/// Number of lines the extraction formulas consume for a system.
std::size_t line_count(SystemKind kind);

/// Measured line positions f1 >= f2 >= ... in Hz.
struct SpectrumLines {
  SystemKind kind = SystemKind::kAB;
  std::vector<double> frequencies;
};

/// Throws ErrorKind::kValidation on a wrong line count, a non-finite entry or
/// an ascending pair. Equal neighbours are accepted (uncoupled doublets).
void validate(const SpectrumLines& lines);

/// Larmor frequencies and coupling in Hz, plus the derived mixing quantities
/// of the coupled two-level blocks.
struct SpinSystemParams {
  SystemKind kind = SystemKind::kAB;
  double nu_a = 0.0;
  double nu_b = 0.0;
  double j_ab = 0.0;
  // AB: C = ½√(J² + (νA − νB)²) and tan 2θ = J / (νA − νB).
  std::optional<double> c_value;
  std::optional<double> theta_mix;
  // AB2: C± = ½√((νA − νB ∓ J/2)² + 2J²), tan 2θ± = √2·J / (νA − νB ∓ J/2).
  std::optional<double> c_plus;
  std::optional<double> c_minus;
  std::optional<double> theta_plus;
  std::optional<double> theta_minus;
};

/// Fills the derived AB fields. theta_mix is left empty when νA = νB and J = 0.
SpinSystemParams make_ab_params(double nu_a, double nu_b, double j_ab);
/// Fills the derived AB2 fields.
SpinSystemParams make_ab2_params(double nu_a, double nu_b, double j_ab);

struct AbExtractionOptions {
  /// Allowed disagreement between f1 − f2 and f3 − f4, Hz.
  double j_consistency_tolerance = 0.02;
};

/// Solves the four-line AB pattern: J is the mean of f1 − f2 and f3 − f4,
/// C = ((f1 − f3) + (f2 − f4)) / 4, νA + νB = f1 + f4 and
/// νA − νB = √(4C² − J²) with νA >= νB.
///
/// Throws ErrorKind::kMismatch when the two J estimates disagree by more than
/// the tolerance, ErrorKind::kInconsistentSpectrum when 4C² < J².
SpinSystemParams extract_ab_params(const SpectrumLines& lines,
                                   const AbExtractionOptions& options = {});

/// θ = ½·atan2(J, νA − νB). Throws ErrorKind::kDomain when νA = νB and J = 0.
double ab_mixing_angle(const SpinSystemParams& p);

/// Four descending AB lines: ½(νA + νB) ± C ± J/2.
SpectrumLines ab_forward_lines(const SpinSystemParams& p);

/// νA = f3, νB = (f5 + f7) / 2, J = ((f1 − f4) + (f6 − f8)) / 3.
SpinSystemParams extract_ab2_params(const SpectrumLines& lines);

/// H = −Σ (νi/2) Z(i) + Σ_{i<j} (Jij/4)(X(i)X(j) + Y(i)Y(j) + Z(i)Z(j)).
/// Zero-weight terms are omitted. `couplings` must be symmetric with a zero
/// diagonal (ErrorKind::kValidation otherwise).
PauliSum build_general_hamiltonian(std::span<const double> nus, const RealMatrix& couplings);

PauliSum build_ab_hamiltonian(const SpinSystemParams& p);
/// Spin A on qubit 0, the equivalent B spins on qubits 1 and 2, no B–B coupling.
PauliSum build_ab2_hamiltonian(const SpinSystemParams& p);

struct AnalyticLevel {
  std::string label;
  double energy = 0.0;
  /// Real coefficients over the computational basis (qubit 0 most significant).
  std::vector<double> state;
};

/// Closed-form eigenpairs, ascending in energy.
struct AnalyticSpectrum {
  std::vector<AnalyticLevel> levels;
};

AnalyticSpectrum ab_analytic_spectrum(const SpinSystemParams& p);
AnalyticSpectrum ab2_analytic_spectrum(const SpinSystemParams& p);

/// Rows of the m_T-ordered symmetrized AB2 basis, each expressed over the
/// computational basis: |000>, (|001>−|010>)/√2, (|001>+|010>)/√2, |100>,
/// |011>, (|101>+|110>)/√2, (|101>−|110>)/√2, |111>.
RealMatrix ab2_symmetrized_basis();

/// U·H·Uᵀ for the AB2 Hamiltonian and the basis above.
HermitianMatrix ab2_symmetrized_matrix(const SpinSystemParams& p);

}  // namespace nmrvqe
