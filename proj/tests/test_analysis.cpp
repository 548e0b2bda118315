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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kronwalk/analysis.hpp"
#include "kronwalk/errors.hpp"
#include "kronwalk/graph.hpp"
#include "kronwalk/search.hpp"
#include "kronwalk/spectral.hpp"

using namespace kronwalk;
using doctest::Approx;

namespace {

std::vector<double> column(const std::vector<ScalingRow>& rows, double ScalingRow::*field) {
  std::vector<double> out;
  for (const ScalingRow& r : rows) out.push_back(r.*field);
  return out;
}

std::vector<double> sizes(const std::vector<ScalingRow>& rows) {
  std::vector<double> out;
  for (const ScalingRow& r : rows) out.push_back(static_cast<double>(r.n));
  return out;
}

}  // namespace

TEST_CASE("bipartite structure") {
  const BipartiteKroneckerReport p2 = bipartite_structure(2, 3);
  CHECK(p2.num_components == 4);
  CHECK(p2.component_order == 2);
  CHECK(p2.p_star == Approx(0.25));

  CHECK(bipartite_structure(2, 7).exponent == Approx(1.0));
  CHECK(bipartite_structure(4, 5).exponent == Approx(0.75));
  CHECK(bipartite_structure(16, 2).exponent == Approx(0.625));

  CHECK_THROWS_AS(bipartite_structure(5, 3), DomainError);
  CHECK_THROWS_AS(bipartite_structure(4, 0), DomainError);
}

TEST_CASE("bipartite structure invariants") {
  for (std::size_t m = 2; m <= 12; m += 2) {
    for (std::size_t j = 1; j <= 10; ++j) {
      CAPTURE(m);
      CAPTURE(j);
      const BipartiteKroneckerReport r = bipartite_structure(m, j);
      CHECK(r.num_components * r.component_order == checked_power(m, j));
      CHECK(r.p_star == Approx(1.0 / std::pow(2.0, static_cast<double>(j - 1))));
      CHECK(r.t_star_scale == Approx(std::sqrt(static_cast<double>(r.component_order))));
      // (pi / sqrt 2) sqrt((2M)^j) carries one extra factor pi over t/p.
      CHECK(r.expected_total == Approx(std::numbers::pi * r.t_star_scale / r.p_star).epsilon(1e-12));
      // total grows as N^exponent when j increases.
      if (j > 1) {
        const BipartiteKroneckerReport prev = bipartite_structure(m, j - 1);
        if (m > 2)
          CHECK(std::log(r.expected_total / prev.expected_total) / std::log(static_cast<double>(m)) ==
                Approx(r.exponent));
      }
    }
  }
}

TEST_CASE("components of kronecker powers") {
  SUBCASE("P2 squared") {
    const std::vector<ComponentInfo> c = components_of_kronecker(path_graph(2), 2);
    REQUIRE(c.size() == 2);
    CHECK(c[0].size == 2);
    CHECK(c[1].size == 2);
    CHECK(c[0].contains_marked);
    CHECK_FALSE(c[1].contains_marked);
  }
  SUBCASE("K3 cubed") {
    const std::vector<ComponentInfo> c = components_of_kronecker(complete_graph(3), 3);
    REQUIRE(c.size() == 1);
    CHECK(c[0].size == 27);
  }
  SUBCASE("C4 squared") {
    // (1, 1) sits in V2 x V2, which shares a component with (0, 0).
    const std::vector<ComponentInfo> c = components_of_kronecker(cycle_graph(4), 2, 5);
    REQUIRE(c.size() == 2);
    CHECK(c[0].size == 8);
    CHECK(c[1].size == 8);
    CHECK(c[0].contains_marked);
    CHECK_FALSE(c[1].contains_marked);
    CHECK(components_of_kronecker(cycle_graph(4), 2, 1)[1].contains_marked);
  }
  CHECK_THROWS_AS(components_of_kronecker(complete_graph(11), 6), ResourceError);
  CHECK_THROWS_AS(components_of_kronecker(complete_graph(3), 2, 9), RangeError);
}

TEST_CASE("bipartite powers split into 2^{j-1} equal components") {
  for (const InitiatorGraph& g : {path_graph(2), cycle_graph(4), complete_bipartite_graph(3)}) {
    for (std::size_t j = 1; j <= 6; ++j) {
      if (checked_power(g.order(), j) > kComponentTraversalCap) continue;
      CAPTURE(g.label());
      CAPTURE(j);
      const BipartiteKroneckerReport r = bipartite_structure(g.order(), j);
      const std::vector<ComponentInfo> c = components_of_kronecker(g, j);
      CHECK(c.size() == r.num_components);
      std::size_t marked = 0;
      for (const ComponentInfo& info : c) {
        CHECK(info.size == r.component_order);
        marked += info.contains_marked;
      }
      CHECK(marked == 1);
    }
  }
}

TEST_CASE("non-bipartite connected powers stay connected") {
  for (const InitiatorGraph& g : {complete_graph(3), cycle_graph(5), paley_graph(5), paley_graph(9), paley_graph(13)}) {
    for (std::size_t j = 1; j <= 5; ++j) {
      if (checked_power(g.order(), j) > kComponentTraversalCap) continue;
      CAPTURE(g.label());
      CAPTURE(j);
      CHECK(components_of_kronecker(g, j).size() == 1);
    }
  }
}

TEST_CASE("unreachable weight matches the component share") {
  for (const InitiatorGraph& g : {path_graph(2), cycle_graph(4)}) {
    const InitiatorSpectrum s = eigendecompose(g);
    for (std::size_t j = 1; j <= 10; ++j) {
      CAPTURE(g.label());
      CAPTURE(j);
      const KroneckerSpectrum ks = kronecker_spectrum(s, j, index_decompose(0, g.order(), j));
      CHECK(std::abs(ks.unreachable_weight() - (1.0 - std::pow(2.0, -static_cast<double>(j - 1)))) <= 1e-9);
    }
  }
}

TEST_CASE("power law fit") {
  const std::vector<double> x{1, 2, 4, 8, 16};
  std::vector<double> y;
  for (const double v : x) y.push_back(3.0 * std::pow(v, 0.75));
  const PowerLawFit fit = fit_power_law(x, y);
  CHECK(fit.slope == Approx(0.75));
  CHECK(std::exp(fit.intercept) == Approx(3.0));
  CHECK(fit.residual == Approx(0.0).scale(1.0));

  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(fit_power_law(one, one), DomainError);
  const std::vector<double> bad{1.0, -2.0};
  const std::vector<double> good{1.0, 2.0};
  CHECK_THROWS_AS(fit_power_law(bad, good), DomainError);
}

TEST_CASE("dominance diagnostic") {
  SUBCASE("complete graphs") {
    std::vector<InitiatorGraph> family;
    for (const std::size_t m : {4, 8, 16, 32, 64}) family.push_back(complete_graph(m));
    const DominanceReport r = dominance_diagnostic(family);
    CHECK(r.dominant);
    CHECK(r.lemma_direct);
    CHECK_FALSE(r.needs_shift);
    CHECK(r.fit.slope == Approx(-1.0).epsilon(0.05));
    for (std::size_t i = 0; i < r.orders.size(); ++i)
      CHECK(r.c_a[i] == Approx(1.0 / static_cast<double>(r.orders[i] - 1)));
  }
  SUBCASE("paley graphs, unordered input") {
    std::vector<InitiatorGraph> family;
    for (const std::size_t m : {13, 5, 25, 9, 17}) family.push_back(paley_graph(m));
    const DominanceReport r = dominance_diagnostic(family);
    CHECK(r.orders == std::vector<std::size_t>{5, 9, 13, 17, 25});
    CHECK(r.dominant);
    CHECK_FALSE(r.needs_shift);
    for (std::size_t i = 0; i < r.orders.size(); ++i) {
      const double m = static_cast<double>(r.orders[i]);
      CHECK(r.c_a[i] == Approx((std::sqrt(m) + 1) / (m - 1)));
    }
  }
  SUBCASE("complete bipartite graphs") {
    std::vector<InitiatorGraph> family;
    for (const std::size_t n : {2, 3, 4, 5}) family.push_back(complete_bipartite_graph(n));
    const DominanceReport r = dominance_diagnostic(family);
    CHECK_FALSE(r.dominant);
    CHECK(r.needs_shift);
    CHECK_FALSE(r.lemma_direct);
  }
  SUBCASE("fixed cycle length is not a family trend") {
    std::vector<InitiatorGraph> family{cycle_graph(5), cycle_graph(7), cycle_graph(9)};
    CHECK_FALSE(dominance_diagnostic(family).dominant);
  }
  std::vector<InitiatorGraph> small{complete_graph(3), complete_graph(4)};
  CHECK_THROWS_AS(dominance_diagnostic(small), DomainError);
  std::vector<InitiatorGraph> irregular{complete_graph(3), complete_graph(4), path_graph(3)};
  CHECK_THROWS_AS(dominance_diagnostic(irregular), DomainError);
}

TEST_CASE("scaling table") {
  SUBCASE("five-cycle") {
    const std::vector<ScalingRow> rows = scaling_table(cycle_graph(5), 1, 8, {GammaPolicy::kAutoExact, 0.0});
    REQUIRE(rows.size() == 8);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].j == i + 1);
      CHECK(rows[i].n == checked_power(5, i + 1));
      CHECK(rows[i].total == Approx(rows[i].t_peak / rows[i].p_peak));
    }
    for (std::size_t i = 4; i < rows.size(); ++i)
      CHECK(rows[i].p_at_half_pi_sqrt_n >= rows[i - 1].p_at_half_pi_sqrt_n);
    CHECK(rows.back().p_at_half_pi_sqrt_n > 0.99);
  }
  SUBCASE("path graph totals grow linearly") {
    const std::vector<ScalingRow> rows = scaling_table(path_graph(2), 3, 10, {GammaPolicy::kAutoExact, 0.0});
    const PowerLawFit fit = fit_power_law(sizes(rows), column(rows, &ScalingRow::total));
    CHECK(fit.slope == Approx(1.0).epsilon(0.05));
    for (const ScalingRow& r : rows) CHECK(r.p_peak <= 2.0 / static_cast<double>(r.n) + 1e-9);
  }
  SUBCASE("four-cycle totals") {
    const std::vector<ScalingRow> rows = scaling_table(cycle_graph(4), 3, 8, {GammaPolicy::kAutoExact, 0.0});
    const PowerLawFit fit = fit_power_law(sizes(rows), column(rows, &ScalingRow::total));
    CHECK(std::abs(fit.slope - 0.75) <= 0.05);
  }
  SUBCASE("deterministic") {
    const auto a = scaling_table(paley_graph(13), 1, 4, {GammaPolicy::kAutoAsymptotic, 0.0});
    const auto b = scaling_table(paley_graph(13), 1, 4, {GammaPolicy::kAutoAsymptotic, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].t_peak == b[i].t_peak);
      CHECK(a[i].p_peak == b[i].p_peak);
    }
  }
  CHECK_THROWS_AS(scaling_table(cycle_graph(5), 3, 2, {}), DomainError);
  CHECK_THROWS_AS(scaling_table(cycle_graph(5), 0, 2, {}), DomainError);
}
