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

#include "nmrvqe/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nmrvqe/error.hpp"

namespace nmrvqe {

namespace {

double off_diagonal_norm(const RealMatrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = p + 1; q < a.cols(); ++q) sum += a(p, q) * a(p, q);
  }
  return std::sqrt(2.0 * sum);
}

double frobenius(const RealMatrix& a) {
  double sum = 0.0;
  for (double x : a.data()) sum += x * x;
  return std::sqrt(sum);
}

// Zeroes a(p, q) with one plane rotation and accumulates it into v.
void rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

RealMatrix real_embedding(const HermitianMatrix& m) {
  const std::size_t n = m.dimension();
  RealMatrix e(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex z = m(r, c);
      e(r, c) = z.real();
      e(r + n, c + n) = z.real();
      e(r, c + n) = -z.imag();
      e(r + n, c) = z.imag();
    }
  }
  return e;
}

void check_dimension(const HermitianMatrix& m) {
  if (m.dimension() > kMaxEigenDimension) {
    fail(ErrorKind::kCapacity, "eigensystem limited to dimension " +
                                   std::to_string(kMaxEigenDimension) + ", got " +
                                   std::to_string(m.dimension()));
  }
}

double norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const Complex& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

void fix_phase(std::vector<Complex>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best]) + 1e-12) best = i;
  }
  if (std::abs(v[best]) == 0.0) return;
  const Complex phase = std::conj(v[best]) / std::abs(v[best]);
  for (Complex& z : v) z *= phase;
  v[best] = std::abs(v[best]);
}

}  // namespace

JacobiResult jacobi_eigen_symmetric(RealMatrix a, const JacobiOptions& options) {
  if (a.rows() != a.cols()) fail(ErrorKind::kValidation, "jacobi needs a square matrix");
  const std::size_t n = a.rows();
  JacobiResult result;
  result.vectors = RealMatrix::identity(n);

  const double threshold = options.relative_threshold * frobenius(a);
  double off = off_diagonal_norm(a);
  result.off_norm_history.push_back(off);
  while (off > threshold) {
    if (result.sweeps == options.max_sweeps) {
      fail(ErrorKind::kNumerical, "jacobi did not converge in " +
                                      std::to_string(options.max_sweeps) +
                                      " sweeps (off-diagonal norm " + std::to_string(off) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        rotate(a, result.vectors, p, q);
      }
    }
    ++result.sweeps;
    off = off_diagonal_norm(a);
    result.off_norm_history.push_back(off);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  RealMatrix sorted(n, n);
  result.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) sorted(r, k) = result.vectors(r, order[k]);
  }
  result.vectors = std::move(sorted);
  return result;
}

std::vector<double> real_embedding_eigenvalues(const HermitianMatrix& m,
                                               const JacobiOptions& options) {
  check_dimension(m);
  return jacobi_eigen_symmetric(real_embedding(m), options).values;
}

EigenSystem eigensystem(const HermitianMatrix& m, const JacobiOptions& options) {
  check_dimension(m);
  const std::size_t n = m.dimension();
  EigenSystem out;
  if (n == 0) return out;

  const JacobiResult jac = jacobi_eigen_symmetric(real_embedding(m), options);
  const double scale = std::max(m.frobenius_norm(), 1e-300);
  const double cluster_gap = 1e-10 * scale;

  // Each eigenvalue of H appears twice in the embedding with eigenvectors
  // [x; y] and [-y; x], both mapping to multiples of x + iy. Within a cluster
  // of 2k equal values a pivoted Gram-Schmidt pass recovers k independent
  // complex vectors.
  std::size_t start = 0;
  while (start < 2 * n) {
    std::size_t end = start + 1;
    while (end < 2 * n && jac.values[end] - jac.values[end - 1] <= cluster_gap) ++end;
    const std::size_t size = end - start;
    if (size % 2 != 0) {
      fail(ErrorKind::kNumerical, "real embedding produced an unpaired eigenvalue near " +
                                      std::to_string(jac.values[start]));
    }

    std::vector<std::vector<Complex>> candidates;
    candidates.reserve(size);
    for (std::size_t k = start; k < end; ++k) {
      std::vector<Complex> u(n);
      for (std::size_t r = 0; r < n; ++r) u[r] = {jac.vectors(r, k), jac.vectors(r + n, k)};
      candidates.push_back(std::move(u));
    }

    std::vector<std::vector<Complex>> basis;
    std::vector<bool> used(size, false);
    for (std::size_t pick = 0; pick < size / 2; ++pick) {
      std::size_t best = size;
      double best_norm = -1.0;
      std::vector<Complex> best_residual;
      for (std::size_t c = 0; c < size; ++c) {
        if (used[c]) continue;
        std::vector<Complex> residual = candidates[c];
        for (const auto& b : basis) {
          Complex proj = 0.0;
          for (std::size_t r = 0; r < n; ++r) proj += std::conj(b[r]) * residual[r];
          for (std::size_t r = 0; r < n; ++r) residual[r] -= proj * b[r];
        }
        const double rn = norm(residual);
        if (rn > best_norm + 1e-12) {
          best_norm = rn;
          best = c;
          best_residual = std::move(residual);
        }
      }
      if (best == size || best_norm < 1e-6) {
        fail(ErrorKind::kNumerical, "could not extract independent eigenvectors from embedding");
      }
      used[best] = true;
      for (Complex& z : best_residual) z /= best_norm;
      basis.push_back(std::move(best_residual));
    }

    for (auto& v : basis) {
      fix_phase(v);
      const std::vector<Complex> mv = m.multiply(v);
      Complex rayleigh = 0.0;
      for (std::size_t r = 0; r < n; ++r) rayleigh += std::conj(v[r]) * mv[r];
      out.values.push_back(rayleigh.real());
      out.vectors.push_back(std::move(v));
    }
    start = end;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return out.values[i] < out.values[j]; });
  EigenSystem sorted;
  for (std::size_t k : order) {
    sorted.values.push_back(out.values[k]);
    sorted.vectors.push_back(std::move(out.vectors[k]));
  }
  return sorted;
}

double ground_energy(const PauliSum& h) {
  const HermitianMatrix dense = to_dense_matrix(h);
  const std::vector<double> doubled = real_embedding_eigenvalues(dense);
  return doubled.front();
}

}  // namespace nmrvqe
