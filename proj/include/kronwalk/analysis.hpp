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
#include <cstdint>
#include <span>
#include <vector>

#include "kronwalk/graph.hpp"
#include "kronwalk/search.hpp"

namespace kronwalk {

/// Component structure and predicted runtime scaling for the j-th Kronecker
/// power of a connected, regular, bipartite M-vertex initiator.
struct BipartiteKroneckerReport {
  std::size_t m = 0;
  std::size_t j = 0;
  std::uint64_t num_components = 0;   // 2^{j-1}
  std::uint64_t component_order = 0;  // 2 (M/2)^j
  double p_star = 0.0;                // 1 / 2^{j-1}
  double t_star_scale = 0.0;          // sqrt(M^j / 2^{j-1})
  double expected_total = 0.0;        // (pi / sqrt 2) sqrt((2M)^j)
  double exponent = 0.0;              // 1/2 + 1 / (2 log2 M)
};

/// Throws DomainError for odd M (no regular connected bipartite graph exists).
BipartiteKroneckerReport bipartite_structure(std::size_t m, std::size_t j);

struct ComponentInfo {
  std::uint64_t size = 0;
  bool contains_marked = false;
};

inline constexpr std::uint64_t kComponentTraversalCap = 1'000'000;

/// Connected components of the j-th Kronecker power, found by BFS where
/// neighbours are generated digit by digit from the initiator. The power is
/// never materialized. Components are listed in order of their smallest
/// vertex. Throws ResourceError when M^j exceeds `cap`.
std::vector<ComponentInfo> components_of_kronecker(const InitiatorGraph& g, std::size_t j,
                                                   std::uint64_t marked = 0,
                                                   std::uint64_t cap = kComponentTraversalCap);

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root-mean-square of the fit in log space
};

/// Least squares of log(y) against log(x).
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// Family-level heuristic for a dominant principal eigenvalue. Members are
/// ordered by vertex count; the family is judged dominant when c_A strictly
/// decreases and a power law in M fits it with a negative exponent. A finite
/// sample can only suggest the asymptotic property.
struct DominanceReport {
  std::vector<std::size_t> orders;
  std::vector<double> c_a;
  PowerLawFit fit;
  bool dominant = false;
  bool lemma_direct = false;  // every c_A < 1 with margin
  bool needs_shift = false;   // some lambda_M / lambda_1 reaches -1
};

/// Needs at least three members, each regular and connected. Throws
/// DomainError otherwise.
DominanceReport dominance_diagnostic(std::span<const InitiatorGraph> family);

struct ScalingRow {
  std::size_t j = 0;
  std::uint64_t n = 0;
  double gamma = 0.0;
  double t_peak = 0.0;
  double p_peak = 0.0;
  double t_star = 0.0;
  double p_at_half_pi_sqrt_n = 0.0;
  double total = 0.0;  // t_peak / p_peak
  bool peak_found = false;
};

struct ScalingOptions {
  std::uint64_t marked = 0;     // flat index in every power
  double window_factor = 2.0;   // peak window is window_factor * pi sqrt(N) / 2
  std::size_t coarse_steps = 2000;
};

std::vector<ScalingRow> scaling_table(const InitiatorGraph& g, std::size_t j_min,
                                      std::size_t j_max, const GammaSelection& gamma,
                                      const ScalingOptions& options = {});

}  // namespace kronwalk
