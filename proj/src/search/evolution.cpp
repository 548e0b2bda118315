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

#include <algorithm>
#include <cmath>

#include "kronwalk/errors.hpp"
#include "kronwalk/search.hpp"
#include "kronwalk/symmetric_eigen.hpp"

namespace kronwalk {

ReducedEvolution::ReducedEvolution(const KroneckerSpectrum& ks, double gamma)
    : gamma_(gamma), n_(ks.n) {
  std::vector<const KroneckerEntry*> coupled;
  for (const auto& e : ks.entries)
    if (e.p > 0.0) coupled.push_back(&e);
  if (coupled.empty())
    throw DegenerateOverlapError("evolve_reduced: marked vertex couples to no eigenspace");

  const std::size_t dim = coupled.size();
  std::vector<double> marked(dim);
  start_.resize(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    marked[d] = std::sqrt(coupled[d]->p);
    start_[d] = coupled[d]->a / marked[d];
  }

  SquareMatrix reduced(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t e = 0; e < dim; ++e) reduced(d, e) = marked[d] * marked[e];
    reduced(d, d) += gamma * coupled[d]->value;
  }
  const SymmetricEigen eig = jacobi_eigensolve(reduced);

  frequencies_ = eig.values;
  weights_.resize(dim);
  modes_.assign(dim, std::vector<double>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    double on_marked = 0.0, on_start = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      const double phi = eig.vectors(d, k);
      modes_[k][d] = phi;
      on_marked += phi * marked[d];
      on_start += phi * start_[d];
    }
    weights_[k] = on_marked * on_start;
  }
}

std::complex<double> ReducedEvolution::amplitude(double t) const {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < frequencies_.size(); ++k) {
    const double phase = frequencies_[k] * t;
    re += weights_[k] * std::cos(phase);
    im -= weights_[k] * std::sin(phase);
  }
  return {re, im};
}

std::vector<std::complex<double>> ReducedEvolution::state(double t) const {
  const std::size_t dim = frequencies_.size();
  std::vector<std::complex<double>> psi(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    double overlap = 0.0;
    for (std::size_t d = 0; d < dim; ++d) overlap += modes_[k][d] * start_[d];
    const std::complex<double> phase = std::polar(1.0, -frequencies_[k] * t);
    for (std::size_t d = 0; d < dim; ++d) psi[d] += modes_[k][d] * overlap * phase;
  }
  return psi;
}

EvolutionSeries ReducedEvolution::series(std::span<const double> times) const {
  EvolutionSeries out;
  out.gamma = gamma_;
  out.n = n_;
  out.times.assign(times.begin(), times.end());
  out.probabilities.reserve(times.size());
  for (const double t : times) out.probabilities.push_back(probability(t));
  return out;
}

EvolutionSeries evolve_reduced(const KroneckerSpectrum& ks, double gamma,
                               std::span<const double> times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0) throw DomainError("evolve_reduced: times must be nonnegative");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw DomainError("evolve_reduced: times must be increasing");
  }
  return ReducedEvolution(ks, gamma).series(times);
}

std::vector<double> uniform_time_grid(double t_max, double dt) {
  if (!(t_max >= 0.0) || !(dt > 0.0)) throw DomainError("time grid needs t_max >= 0 and dt > 0");
  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  std::vector<double> times(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) times[i] = static_cast<double>(i) * dt;
  return times;
}

Peak find_peak(const ReducedEvolution& evolution, double t_max, double coarse_dt) {
  if (!(t_max > 0.0)) throw DomainError("find_peak: t_max must be positive");
  if (!(coarse_dt > 0.0)) throw DomainError("find_peak: coarse_dt must be positive");

  const std::vector<double> grid = uniform_time_grid(t_max, coarse_dt);
  std::vector<double> p(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) p[i] = evolution.probability(grid[i]);

  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (!(p[i] > p[i - 1] && p[i] >= p[i + 1])) continue;

    // Golden-section maximization on the bracketing interval.
    constexpr double kInvPhi = 0.6180339887498949;
    double lo = grid[i - 1], hi = grid[i + 1];
    double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
    double f1 = evolution.probability(x1), f2 = evolution.probability(x2);
    const double width = 1e-6 * t_max;
    while (hi - lo > width) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kInvPhi * (hi - lo);
        f2 = evolution.probability(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kInvPhi * (hi - lo);
        f1 = evolution.probability(x1);
      }
    }
    Peak peak{0.5 * (lo + hi), 0.0, true};
    peak.probability = evolution.probability(peak.time);
    if (p[i] > peak.probability) peak = {grid[i], p[i], true};
    return peak;
  }

  const double p_end = evolution.probability(t_max);
  if (p_end >= p.front()) return {t_max, p_end, false};
  return {0.0, p.front(), false};
}

Peak find_peak(const KroneckerSpectrum& ks, double gamma, double t_max, double coarse_dt) {
  return find_peak(ReducedEvolution(ks, gamma), t_max, coarse_dt);
}

}  // namespace kronwalk
