// Copyright 2026 The kronwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kronwalk {

// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static SquareMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

  bool is_symmetric() const;
  double trace() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  // Sorted descending.
  std::vector<double> values;
  // Column k of `vectors` is the unit eigenvector for values[k].
  SquareMatrix vectors;
};

struct JacobiOptions {
  int max_sweeps = 100;
  // Converged once the off-diagonal Frobenius norm drops below
  // tolerance * ||A||_F.
  double tolerance = 1e-15;
};

/// Full eigendecomposition of a real symmetric matrix by the cyclic Jacobi
/// method. Throws DomainError for non-symmetric input and NumericError when
/// the sweep limit is reached before convergence.
SymmetricEigen jacobi_eigensolve(const SquareMatrix& a, const JacobiOptions& options = {});

}  // namespace kronwalk
