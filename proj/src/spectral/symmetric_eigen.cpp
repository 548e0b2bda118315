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

#include "kronwalk/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kronwalk/errors.hpp"

namespace kronwalk {

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool SquareMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = i + 1; k < n_; ++k)
      if ((*this)(i, k) != (*this)(k, i)) return false;
  return true;
}

double SquareMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

namespace {

double off_diagonal_norm(const SquareMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (i != k) s += a(i, k) * a(i, k);
  return std::sqrt(s);
}

double frobenius_norm(const SquareMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) s += a(i, k) * a(i, k);
  return std::sqrt(s);
}

// Zeroes a(p,q) with a plane rotation applied from both sides; accumulates
// the rotation into v.
void rotate(SquareMatrix& a, SquareMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.size();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigen jacobi_eigensolve(const SquareMatrix& input, const JacobiOptions& options) {
  if (!input.is_symmetric()) throw DomainError("jacobi_eigensolve: matrix is not symmetric");

  const std::size_t n = input.size();
  SquareMatrix a = input;
  SquareMatrix v = SquareMatrix::identity(n);
  const double scale = frobenius_norm(a);

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= options.tolerance * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::abs(a(p, q));
        // Entries below the diagonal's rounding level are dropped outright
        // after the first few sweeps.
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
        } else if (a(p, q) != 0.0) {
          rotate(a, v, p, q);
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > options.tolerance * scale)
    throw NumericError("jacobi_eigensolve: no convergence within sweep limit");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = SquareMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace kronwalk
