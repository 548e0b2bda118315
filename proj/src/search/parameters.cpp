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

#include <cmath>
#include <numbers>

#include "kronwalk/errors.hpp"
#include "kronwalk/search.hpp"

namespace kronwalk {

double critical_gamma_asymptotic(const InitiatorSpectrum& s, std::size_t j) {
  if (!s.principal_unique)
    throw DomainError("critical_gamma_asymptotic: principal eigenvalue is degenerate");
  if (!(s.principal_value > 0.0))
    throw DomainError("critical_gamma_asymptotic: principal eigenvalue must be positive");
  return 1.0 / std::pow(s.principal_value, static_cast<double>(j));
}

double critical_r(const KroneckerSpectrum& ks) {
  double weighted = 0.0, total = 0.0;
  for (std::size_t d = 1; d < ks.entries.size(); ++d) {
    const KroneckerEntry& e = ks.entries[d];
    if (e.p <= 0.0) continue;
    weighted += e.p / (1.0 - e.normalized);
    total += e.p;
  }
  if (total == 0.0)
    throw DegenerateOverlapError("critical_r: marked vertex has no non-principal overlap");
  return weighted / total - 1.0;
}

double gamma_from_r(double r, double principal) {
  if (!(principal > 0.0)) throw DomainError("gamma_from_r: principal eigenvalue must be positive");
  return (1.0 + r) / principal;
}

double runtime_formula(const KroneckerSpectrum& ks) {
  if (ks.entries.empty() || !(ks.entries.front().p > 0.0))
    throw DomainError("runtime_formula: marked vertex has no principal overlap");
  double sum = 0.0;
  for (std::size_t d = 1; d < ks.entries.size(); ++d) {
    const double gap = 1.0 - ks.entries[d].normalized;
    sum += ks.entries[d].p / (gap * gap);
  }
  return std::numbers::pi / (2.0 * std::sqrt(ks.entries.front().p)) * std::sqrt(sum);
}

ShiftRescale optimal_shift_rescale(double lambda2, double lambdaN) {
  if (!(lambda2 < 1.0))
    throw DomainError("optimal_shift_rescale: lambda2 >= 1, graph is disconnected");
  if (!(lambdaN >= -1.0) || !(lambdaN <= lambda2))
    throw DomainError("optimal_shift_rescale: need -1 <= lambdaN <= lambda2");
  ShiftRescale out;
  out.a = -(lambda2 + lambdaN) / 2.0;
  out.b = (2.0 - lambda2 - lambdaN) / 2.0;
  out.c_min = std::abs(lambda2 - lambdaN) / std::abs(2.0 - lambda2 - lambdaN);
  out.shifted_lambda2 = (lambda2 - lambdaN) / (2.0 - lambda2 - lambdaN);
  out.shifted_lambdaN = -out.shifted_lambda2;
  return out;
}

double shifted_bound(double lambda2, double lambdaN, double a) {
  if (!(a > -1.0)) throw DomainError("shifted_bound: need a > -1");
  return std::max(std::abs(lambda2 + a), std::abs(lambdaN + a)) / std::abs(1.0 + a);
}

double unshifted_r(double r_prime, double a) {
  if (!(a > -1.0)) throw DomainError("unshifted_r: need a > -1");
  return (r_prime - a) / (1.0 + a);
}

double select_gamma(const InitiatorSpectrum& s, const KroneckerSpectrum& ks,
                    const GammaSelection& selection) {
  switch (selection.policy) {
    case GammaPolicy::kAutoExact:
      return gamma_from_r(critical_r(ks), ks.principal);
    case GammaPolicy::kAutoAsymptotic:
      return critical_gamma_asymptotic(s, ks.j);
    case GammaPolicy::kExplicit:
      if (!(selection.value > 0.0)) throw DomainError("explicit gamma must be positive");
      return selection.value;
  }
  throw DomainError("unknown gamma policy");
}

SearchParams search_params(const InitiatorSpectrum& s, const KroneckerSpectrum& ks,
                           const GammaSelection& selection, bool optimal_shift) {
  SearchParams params;
  params.gamma = select_gamma(s, ks, selection);
  params.r = params.gamma * ks.principal - 1.0;
  params.c = ks.non_principal_bound();
  if (optimal_shift) {
    if (s.classes.size() < 2 || !(s.principal_value > 0.0))
      throw DomainError("optimal shift needs at least two eigenvalue classes");
    params.shift = optimal_shift_rescale(s.classes[1].value / s.principal_value,
                                         s.classes.back().value / s.principal_value);
    params.c = params.shift->c_min;
  }
  if (params.c < 1.0) {
    const double amp = (1.0 - params.c) / (1.0 + params.c);
    params.p_lower_bound = amp * amp;
  }
  params.t_star = runtime_formula(ks);
  params.epsilon = std::abs(ks.start_overlap());
  return params;
}

}  // namespace kronwalk
