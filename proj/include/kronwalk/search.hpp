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
#include <optional>
#include <span>
#include <vector>

#include "kronwalk/spectral.hpp"

namespace kronwalk {

// ---------------------------------------------------------------------------
// Critical parameters
// ---------------------------------------------------------------------------

/// 1 / lambda_1^j. Throws DomainError when the principal eigenvalue is
/// degenerate or not positive.
double critical_gamma_asymptotic(const InitiatorSpectrum& s, std::size_t j);

/// Critical value of r
///   r_c = (sum_{d>0} p_d / (1 - lambda_d)) / (sum_{d>0} p_d) - 1
/// over non-principal entries with p_d > 0 (lambda_d normalized).
/// Throws DegenerateOverlapError if no such entry exists.
double critical_r(const KroneckerSpectrum& ks);

/// (1 + r) / principal. Throws DomainError unless principal > 0.
double gamma_from_r(double r, double principal);

/// Predicted runtime
///   t* = pi / (2 sqrt(p_1)) * sqrt(sum_{d>0} p_d / (1 - lambda_d)^2).
/// Throws DomainError when p_1 = 0.
double runtime_formula(const KroneckerSpectrum& ks);

/// Shift/rescale H1' = (H1 + a I) / b of a normalized walk operator.
struct ShiftRescale {
  double a = 0.0;
  double b = 1.0;
  double c_min = 0.0;
  double shifted_lambda2 = 0.0;
  double shifted_lambdaN = 0.0;
};

/// Optimal (a, b) minimizing c(a) for normalized eigenvalues lambda2 and
/// lambdaN of H1. Throws DomainError when lambda2 >= 1 (disconnected graph)
/// or the inputs are not ordered within [-1, 1].
ShiftRescale optimal_shift_rescale(double lambda2, double lambdaN);

/// c(a) = max(|lambda2 + a|, |lambdaN + a|) / |1 + a| for a > -1.
double shifted_bound(double lambda2, double lambdaN, double a);

/// Maps the r found for the shifted operator back to the
/// unshifted one: (r' - a) / (1 + a). Throws DomainError for a <= -1.
double unshifted_r(double r_prime, double a);

enum class GammaPolicy { kAutoExact, kAutoAsymptotic, kExplicit };

struct GammaSelection {
  GammaPolicy policy = GammaPolicy::kAutoExact;
  double value = 0.0;  // used by kExplicit
};

double select_gamma(const InitiatorSpectrum& s, const KroneckerSpectrum& ks,
                    const GammaSelection& selection);

struct SearchParams {
  double gamma = 0.0;
  double r = 0.0;  // gamma * Lambda_1 - 1
  double c = 0.0;
  double t_star = 0.0;
  double p_lower_bound = 0.0;  // ((1 - c) / (1 + c))^2, zero when c >= 1
  double epsilon = 0.0;        // |<w|s>|
  std::optional<ShiftRescale> shift;
};

/// Assembles SearchParams. With `optimal_shift`, the shift is derived from the
/// initiator's normalized lambda_2 and lambda_M and c becomes its c_min.
SearchParams search_params(const InitiatorSpectrum& s, const KroneckerSpectrum& ks,
                           const GammaSelection& selection, bool optimal_shift);

// ---------------------------------------------------------------------------
// Reduced-subspace evolution
// ---------------------------------------------------------------------------

struct EvolutionSeries {
  std::vector<double> times;
  std::vector<double> probabilities;
  double gamma = 0.0;
  std::uint64_t n = 0;
};

/// Exact evolution under H+ = gamma A^{(x)j} + |w><w| restricted to the
/// invariant subspace span{P_d |w>}. In the orthonormal basis
/// e_d = P_d|w>/sqrt(p_d) the operator is
///   R = gamma diag(Lambda_d) + sqrt(p) sqrt(p)^T,
/// the start state has coordinates a_d/sqrt(p_d) and the marked vertex
/// sqrt(p_d). The part of |s> outside the subspace never reaches |w>.
class ReducedEvolution {
 public:
  /// Throws DegenerateOverlapError when no entry has p_d > 0.
  ReducedEvolution(const KroneckerSpectrum& ks, double gamma);

  std::size_t dimension() const noexcept { return frequencies_.size(); }
  double gamma() const noexcept { return gamma_; }
  std::uint64_t n() const noexcept { return n_; }

  /// <w| e^{-i H+ t} |s>.
  std::complex<double> amplitude(double t) const;
  double probability(double t) const { return std::norm(amplitude(t)); }

  /// Reduced state coordinates at time t in the e_d basis.
  std::vector<std::complex<double>> state(double t) const;

  EvolutionSeries series(std::span<const double> times) const;

 private:
  double gamma_;
  std::uint64_t n_;
  std::vector<double> frequencies_;  // eigenvalues of R
  std::vector<double> weights_;      // <w|phi_k><phi_k|s>
  std::vector<double> start_;        // start coordinates
  std::vector<std::vector<double>> modes_;  // eigenvectors of R
};

EvolutionSeries evolve_reduced(const KroneckerSpectrum& ks, double gamma,
                               std::span<const double> times);

/// 0, dt, 2 dt, ... up to t_max inclusive (within dt * 1e-9).
std::vector<double> uniform_time_grid(double t_max, double dt);

struct Peak {
  double time = 0.0;
  double probability = 0.0;
  bool local_max_found = false;  // false: window endpoint returned
};

/// First local maximum of p(t) on [0, t_max]: coarse scan at step coarse_dt
/// then golden-section refinement to |dt| <= 1e-6 t_max.
Peak find_peak(const ReducedEvolution& evolution, double t_max, double coarse_dt);
Peak find_peak(const KroneckerSpectrum& ks, double gamma, double t_max, double coarse_dt);

}  // namespace kronwalk
