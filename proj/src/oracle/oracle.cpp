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

#include "kronwalk/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "kronwalk/errors.hpp"
#include "kronwalk/kronecker_index.hpp"
#include "kronwalk/spectral.hpp"

namespace kronwalk::oracle {

std::uint64_t dense_cap() {
  if (const char* text = std::getenv(kDenseCapVariable)) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text, &end, 10);
    if (end != text && *end == '\0' && value > 0) return value;
  }
  return kDefaultDenseCap;
}

DenseOperator dense_kronecker(const InitiatorGraph& g, std::size_t j, std::uint64_t cap) {
  if (j < 1) throw DomainError("dense_kronecker: j must be >= 1");
  const std::size_t m = g.order();
  const std::uint64_t n = checked_power(m, j);
  if (n > cap) {
    // Operator, eigenvectors and solver workspace.
    const double gib = 3.0 * static_cast<double>(n) * static_cast<double>(n) * sizeof(double) / (1u << 30);
    throw ResourceError("dense_kronecker: N = " + std::to_string(n) + " exceeds dense cap " +
                        std::to_string(cap) + " (needs ~" + std::to_string(gib) + " GiB); set " +
                        kDenseCapVariable + " to override");
  }

  Eigen::MatrixXd a(m, m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) a(u, v) = g.weight(u, v);

  Eigen::MatrixXd power = a;
  for (std::size_t k = 1; k < j; ++k) {
    Eigen::MatrixXd next(power.rows() * m, power.cols() * m);
    for (Eigen::Index r = 0; r < power.rows(); ++r)
      for (Eigen::Index c = 0; c < power.cols(); ++c)
        next.block(r * m, c * m, m, m) = power(r, c) * a;
    power = std::move(next);
  }
  return {n, std::move(power)};
}

DenseEvolution::DenseEvolution(const DenseOperator& op, double gamma, std::uint64_t marked,
                               HamiltonianSign sign)
    : marked_(marked) {
  if (marked >= op.n) throw RangeError("DenseEvolution: marked vertex out of range");
  const auto w = static_cast<Eigen::Index>(marked);
  Eigen::MatrixXd h = gamma * op.entries;
  h(w, w) += 1.0;
  if (sign == HamiltonianSign::kNegative) h = -h;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw NumericError("DenseEvolution: eigensolver failed");
  energies_ = solver.eigenvalues();
  modes_ = solver.eigenvectors();
  const Eigen::VectorXd uniform =
      Eigen::VectorXd::Constant(h.rows(), 1.0 / std::sqrt(static_cast<double>(op.n)));
  start_overlap_ = modes_.transpose() * uniform;
}

std::vector<std::complex<double>> DenseEvolution::state(double t) const {
  const Eigen::Index n = modes_.rows();
  Eigen::VectorXcd coeff(n);
  for (Eigen::Index k = 0; k < n; ++k) coeff(k) = start_overlap_(k) * std::polar(1.0, -energies_(k) * t);
  const Eigen::VectorXcd psi = modes_.cast<std::complex<double>>() * coeff;
  return {psi.data(), psi.data() + n};
}

double DenseEvolution::probability(double t) const {
  const auto w = static_cast<Eigen::Index>(marked_);
  std::complex<double> amp = 0.0;
  for (Eigen::Index k = 0; k < energies_.size(); ++k)
    amp += modes_(w, k) * start_overlap_(k) * std::polar(1.0, -energies_(k) * t);
  return std::norm(amp);
}

EvolutionSeries evolve_dense(const DenseOperator& op, double gamma, std::uint64_t marked,
                             std::span<const double> times, HamiltonianSign sign) {
  const DenseEvolution evolution(op, gamma, marked, sign);
  EvolutionSeries out;
  out.gamma = gamma;
  out.n = op.n;
  out.times.assign(times.begin(), times.end());
  for (const double t : times) out.probabilities.push_back(evolution.probability(t));
  return out;
}

double cross_validate(const InitiatorGraph& g, std::size_t j, double gamma, double t_max,
                      double dt, std::uint64_t marked) {
  const DenseOperator op = dense_kronecker(g, j);
  const std::vector<double> times = uniform_time_grid(t_max, dt);
  const EvolutionSeries dense = evolve_dense(op, gamma, marked, times);

  const InitiatorSpectrum s = eigendecompose(g);
  const KroneckerSpectrum ks = kronecker_spectrum(s, j, index_decompose(marked, g.order(), j));
  const EvolutionSeries reduced = evolve_reduced(ks, gamma, times);

  double worst = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i)
    worst = std::max(worst, std::abs(dense.probabilities[i] - reduced.probabilities[i]));
  return worst;
}

}  // namespace kronwalk::oracle
