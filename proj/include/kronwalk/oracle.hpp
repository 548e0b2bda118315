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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kronwalk/graph.hpp"
#include "kronwalk/search.hpp"

namespace kronwalk::oracle {

inline constexpr std::uint64_t kDefaultDenseCap = 4096;
inline constexpr const char* kDenseCapVariable = "KRONWALK_DENSE_CAP";

/// Largest N the dense reference will materialize: KRONWALK_DENSE_CAP when
/// set to a positive integer, otherwise 4096.
std::uint64_t dense_cap();

/// Materialized A^{(x)j}.
struct DenseOperator {
  std::uint64_t n = 0;
  Eigen::MatrixXd entries;
};

/// Entry (u, v) = prod_k A(u_k, v_k). Throws ResourceError when M^j exceeds
/// `cap`; the memory estimate is checked before anything is allocated.
DenseOperator dense_kronecker(const InitiatorGraph& g, std::size_t j,
                              std::uint64_t cap = dense_cap());

enum class HamiltonianSign {
  kPositive,  // H+ = gamma A + |w><w|
  kNegative,  // H  = -gamma A - |w><w|
};

/// Full-space evolution from the uniform state by exact diagonalization.
class DenseEvolution {
 public:
  DenseEvolution(const DenseOperator& op, double gamma, std::uint64_t marked,
                 HamiltonianSign sign = HamiltonianSign::kPositive);

  std::vector<std::complex<double>> state(double t) const;
  double probability(double t) const;

 private:
  std::uint64_t marked_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd modes_;
  Eigen::VectorXd start_overlap_;  // <phi_k|s>
};

EvolutionSeries evolve_dense(const DenseOperator& op, double gamma, std::uint64_t marked,
                             std::span<const double> times,
                             HamiltonianSign sign = HamiltonianSign::kPositive);

/// max_t |p_dense(t) - p_reduced(t)| on the grid 0, dt, ..., t_max.
double cross_validate(const InitiatorGraph& g, std::size_t j, double gamma, double t_max,
                      double dt, std::uint64_t marked = 0);

}  // namespace kronwalk::oracle
