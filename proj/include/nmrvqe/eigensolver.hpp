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

#include <cstddef>
#include <vector>

#include "nmrvqe/matrix.hpp"
#include "nmrvqe/pauli.hpp"

namespace nmrvqe {

/// Largest Hermitian dimension accepted by eigensystem().
inline constexpr std::size_t kMaxEigenDimension = 4096;

struct JacobiOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius norm is below this fraction of ‖A‖_F.
  double relative_threshold = 1e-12;
};

struct JacobiResult {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // column k pairs with values[k]
  int sweeps = 0;
  /// Off-diagonal norm before the first sweep and after each sweep.
  std::vector<double> off_norm_history;
};

/// Cyclic Jacobi diagonalization of a real symmetric matrix. Throws
/// ErrorKind::kNumerical if the sweep cap is hit before convergence.
JacobiResult jacobi_eigen_symmetric(RealMatrix a, const JacobiOptions& options = {});

/// Eigenpairs of a Hermitian matrix; vectors[k] is the unit eigenvector for
/// values[k] (ascending), phase-fixed so its largest-magnitude component is
/// real and positive.
struct EigenSystem {
  std::vector<double> values;
  std::vector<std::vector<Complex>> vectors;
};

/// H = A + iB is embedded as the real symmetric [[A, -B], [B, A]], which is
/// diagonalized by Jacobi; its doubled spectrum is collapsed back to n pairs.
EigenSystem eigensystem(const HermitianMatrix& m, const JacobiOptions& options = {});

/// Sorted 2n spectrum of the real embedding, before collapsing.
std::vector<double> real_embedding_eigenvalues(const HermitianMatrix& m,
                                               const JacobiOptions& options = {});

/// Minimum eigenvalue of the dense expansion of `h`.
double ground_energy(const PauliSum& h);

}  // namespace nmrvqe
