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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nmrvqe {

using Complex = std::complex<double>;

/// Dense row-major real matrix.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square complex matrix equal to its conjugate transpose.
///
/// Hermiticity is checked when built from raw entries (1e-12 entrywise) and
/// preserved by `add`, which always writes the mirrored element.
class HermitianMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;

  HermitianMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit HermitianMatrix(std::size_t dimension)
      : dimension_(dimension), entries_(dimension * dimension) {}

  /// Throws ErrorKind::kValidation when the entries are not Hermitian or the
  /// entry count is not dimension².
  static HermitianMatrix from_entries(std::size_t dimension, std::vector<Complex> row_major);
  static HermitianMatrix from_real(const RealMatrix& symmetric);

  std::size_t dimension() const noexcept { return dimension_; }
  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * dimension_ + c]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  /// Adds `value` at (r, c) and its conjugate at (c, r). Diagonal additions
  /// keep only the real part.
  void add(std::size_t r, std::size_t c, Complex value);

  double frobenius_norm() const;
  bool is_real() const;

  std::vector<Complex> multiply(std::span<const Complex> v) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<Complex> entries_;
};

}  // namespace nmrvqe
