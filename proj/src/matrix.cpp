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

#include "nmrvqe/matrix.hpp"

#include <cmath>
#include <sstream>

#include "nmrvqe/error.hpp"

namespace nmrvqe {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::from_entries(std::size_t dimension,
                                              std::vector<Complex> row_major) {
  if (row_major.size() != dimension * dimension) {
    std::ostringstream msg;
    msg << "hermitian matrix of dimension " << dimension << " needs " << dimension * dimension
        << " entries, got " << row_major.size();
    fail(ErrorKind::kValidation, msg.str());
  }
  for (std::size_t r = 0; r < dimension; ++r) {
    for (std::size_t c = r; c < dimension; ++c) {
      const Complex upper = row_major[r * dimension + c];
      const Complex lower = row_major[c * dimension + r];
      if (std::abs(upper - std::conj(lower)) > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "matrix is not hermitian at (" << r << ", " << c << "): " << upper << " vs "
            << lower;
        fail(ErrorKind::kValidation, msg.str());
      }
    }
  }
  HermitianMatrix m;
  m.dimension_ = dimension;
  m.entries_ = std::move(row_major);
  return m;
}

HermitianMatrix HermitianMatrix::from_real(const RealMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) {
    fail(ErrorKind::kValidation, "hermitian matrix must be square");
  }
  std::vector<Complex> entries(symmetric.data().begin(), symmetric.data().end());
  return from_entries(symmetric.rows(), std::move(entries));
}

void HermitianMatrix::add(std::size_t r, std::size_t c, Complex value) {
  if (r == c) {
    entries_[r * dimension_ + r] += value.real();
    return;
  }
  entries_[r * dimension_ + c] += value;
  entries_[c * dimension_ + r] += std::conj(value);
}

double HermitianMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool HermitianMatrix::is_real() const {
  for (const Complex& z : entries_) {
    if (z.imag() != 0.0) return false;
  }
  return true;
}

std::vector<Complex> HermitianMatrix::multiply(std::span<const Complex> v) const {
  if (v.size() != dimension_) {
    fail(ErrorKind::kDimension, "vector length does not match matrix dimension");
  }
  std::vector<Complex> out(dimension_);
  for (std::size_t r = 0; r < dimension_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < dimension_; ++c) acc += entries_[r * dimension_ + c] * v[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace nmrvqe
