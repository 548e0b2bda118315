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

#include "kronwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <string>

#include "kronwalk/errors.hpp"
#include "kronwalk/kronecker_index.hpp"
#include "kronwalk/spectral.hpp"

namespace kronwalk {

BipartiteKroneckerReport bipartite_structure(std::size_t m, std::size_t j) {
  if (m < 2 || m % 2 != 0)
    throw DomainError("bipartite_structure: M must be even (got " + std::to_string(m) + ")");
  if (j < 1) throw DomainError("bipartite_structure: j must be >= 1");

  BipartiteKroneckerReport r;
  r.m = m;
  r.j = j;
  r.num_components = checked_power(2, j - 1);
  r.component_order = 2 * checked_power(m / 2, j);
  const double md = static_cast<double>(m);
  const double jd = static_cast<double>(j);
  r.p_star = 1.0 / static_cast<double>(r.num_components);
  r.t_star_scale = std::sqrt(std::pow(md, jd) / static_cast<double>(r.num_components));
  r.expected_total = std::numbers::pi / std::numbers::sqrt2 * std::sqrt(std::pow(2.0 * md, jd));
  r.exponent = 0.5 + 1.0 / (2.0 * std::log2(md));
  return r;
}

std::vector<ComponentInfo> components_of_kronecker(const InitiatorGraph& g, std::size_t j,
                                                   std::uint64_t marked, std::uint64_t cap) {
  const std::size_t m = g.order();
  if (j < 1) throw DomainError("components_of_kronecker: j must be >= 1");
  const std::uint64_t n = checked_power(m, j);
  if (n > cap)
    throw ResourceError("components_of_kronecker: M^j = " + std::to_string(n) +
                        " exceeds traversal cap " + std::to_string(cap));
  if (marked >= n) throw RangeError("components_of_kronecker: marked vertex out of range");

  std::vector<std::vector<std::size_t>> adjacent(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (g.weight(u, v) != 0.0) adjacent[u].push_back(v);

  std::vector<bool> seen(n, false);
  std::vector<ComponentInfo> components;
  std::vector<std::size_t> choice(j);
  for (std::uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ComponentInfo info;
    std::queue<std::uint64_t> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const std::uint64_t flat = frontier.front();
      frontier.pop();
      ++info.size;
      if (flat == marked) info.contains_marked = true;

      const KroneckerIndex here = index_decompose(flat, m, j);
      bool isolated = false;
      for (std::size_t k = 0; k < j; ++k) isolated = isolated || adjacent[here.digits[k]].empty();
      if (isolated) continue;

      // Odometer over the per-digit neighbour lists.
      std::fill(choice.begin(), choice.end(), 0);
      while (true) {
        std::uint64_t next = 0;
        for (std::size_t k = 0; k < j; ++k) next = next * m + adjacent[here.digits[k]][choice[k]];
        if (!seen[next]) {
          seen[next] = true;
          frontier.push(next);
        }
        bool exhausted = true;
        for (std::size_t k = j; k-- > 0;) {
          if (++choice[k] < adjacent[here.digits[k]].size()) {
            exhausted = false;
            break;
          }
          choice[k] = 0;
        }
        if (exhausted) break;
      }
    }
    components.push_back(info);
  }
  return components;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw DomainError("fit_power_law: need at least two paired samples");
  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("fit_power_law: samples must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_power_law: abscissae are all equal");
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

DominanceReport dominance_diagnostic(std::span<const InitiatorGraph> family) {
  if (family.size() < 3) throw DomainError("dominance_diagnostic: need at least 3 family members");

  struct Member {
    std::size_t order;
    double c_a;
    double lowest;  // lambda_M / lambda_1
  };
  std::vector<Member> members;
  for (const InitiatorGraph& g : family) {
    const GraphProperties props = analyze(g);
    if (!props.is_regular) throw DomainError("dominance_diagnostic: " + g.label() + " is not regular");
    if (!props.is_connected)
      throw DomainError("dominance_diagnostic: " + g.label() + " is not connected");
    const InitiatorSpectrum s = eigendecompose(g);
    members.push_back({g.order(), dominance_ratio(s), s.classes.back().value / s.principal_value});
  }
  std::stable_sort(members.begin(), members.end(),
                   [](const Member& x, const Member& y) { return x.order < y.order; });

  DominanceReport report;
  bool decreasing = true, positive = true;
  report.lemma_direct = true;
  double lowest = 1.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    report.orders.push_back(members[i].order);
    report.c_a.push_back(members[i].c_a);
    if (i > 0 && !(members[i].c_a < members[i - 1].c_a)) decreasing = false;
    if (!(members[i].c_a > 0.0)) positive = false;
    if (!(members[i].c_a < 1.0 - 1e-9)) report.lemma_direct = false;
    lowest = std::min(lowest, members[i].lowest);
  }
  report.needs_shift = lowest <= -1.0 + 1e-9;

  if (positive) {
    std::vector<double> orders(report.orders.begin(), report.orders.end());
    report.fit = fit_power_law(orders, report.c_a);
    report.dominant = decreasing && report.fit.slope < 0.0;
  } else {
    // c_A = 0 somewhere: non-principal spectrum vanishes, trivially dominant
    // provided the sample still decreases.
    report.dominant = decreasing;
  }
  return report;
}

std::vector<ScalingRow> scaling_table(const InitiatorGraph& g, std::size_t j_min,
                                      std::size_t j_max, const GammaSelection& gamma,
                                      const ScalingOptions& options) {
  if (j_min < 1 || j_max < j_min) throw DomainError("scaling_table: need 1 <= j_min <= j_max");
  if (options.coarse_steps < 2) throw DomainError("scaling_table: coarse_steps must be >= 2");
  const InitiatorSpectrum s = eigendecompose(g);

  std::vector<ScalingRow> rows;
  for (std::size_t j = j_min; j <= j_max; ++j) {
    const std::uint64_t n = checked_power(g.order(), j);
    const KroneckerSpectrum ks = kronecker_spectrum(s, j, index_decompose(options.marked, g.order(), j));
    ScalingRow row;
    row.j = j;
    row.n = n;
    row.gamma = select_gamma(s, ks, gamma);
    const ReducedEvolution evolution(ks, row.gamma);
    const double half_pi_sqrt_n = std::numbers::pi * std::sqrt(static_cast<double>(n)) / 2.0;
    const double t_max = options.window_factor * half_pi_sqrt_n;
    const Peak peak = find_peak(evolution, t_max, t_max / static_cast<double>(options.coarse_steps));
    row.t_peak = peak.time;
    row.p_peak = peak.probability;
    row.peak_found = peak.local_max_found;
    row.t_star = runtime_formula(ks);
    row.p_at_half_pi_sqrt_n = evolution.probability(half_pi_sqrt_n);
    row.total = row.t_peak / row.p_peak;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kronwalk
