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

#include "kronwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "kronwalk/errors.hpp"
#include "kronwalk/finite_field.hpp"

namespace kronwalk {

InitiatorGraph::InitiatorGraph(SquareMatrix weights, std::string label)
    : weights_(std::move(weights)), label_(std::move(label)) {
  if (weights_.size() < 2)
    throw InvalidOrderError("initiator graph needs at least 2 vertices, got " +
                            std::to_string(weights_.size()));
  if (!weights_.is_symmetric()) throw DomainError("initiator weight matrix is not symmetric");
}

bool InitiatorGraph::is_simple() const {
  const std::size_t m = order();
  for (std::size_t u = 0; u < m; ++u) {
    if (weights_(u, u) != 0.0) return false;
    for (std::size_t v = 0; v < m; ++v)
      if (weights_(u, v) != 0.0 && weights_(u, v) != 1.0) return false;
  }
  return true;
}

InitiatorGraph complete_graph(std::size_t m) {
  if (m < 2) throw InvalidOrderError("complete_graph: M must be >= 2");
  SquareMatrix w(m, 1.0);
  for (std::size_t u = 0; u < m; ++u) w(u, u) = 0.0;
  return {std::move(w), "K" + std::to_string(m)};
}

InitiatorGraph cycle_graph(std::size_t m) {
  if (m < 3) throw InvalidOrderError("cycle_graph: M must be >= 3");
  SquareMatrix w(m);
  for (std::size_t u = 0; u < m; ++u) {
    const std::size_t v = (u + 1) % m;
    w(u, v) = 1.0;
    w(v, u) = 1.0;
  }
  return {std::move(w), "C" + std::to_string(m)};
}

InitiatorGraph path_graph(std::size_t m) {
  if (m < 2) throw InvalidOrderError("path_graph: M must be >= 2");
  SquareMatrix w(m);
  for (std::size_t u = 0; u + 1 < m; ++u) {
    w(u, u + 1) = 1.0;
    w(u + 1, u) = 1.0;
  }
  return {std::move(w), "P" + std::to_string(m)};
}

InitiatorGraph complete_bipartite_graph(std::size_t n) {
  if (n < 1) throw InvalidOrderError("complete_bipartite_graph: n must be >= 1");
  const std::size_t m = 2 * n;
  SquareMatrix w(m);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = n; v < m; ++v) {
      w(u, v) = 1.0;
      w(v, u) = 1.0;
    }
  return {std::move(w), "K" + std::to_string(n) + "," + std::to_string(n)};
}

InitiatorGraph paley_graph(std::size_t q) {
  if (!prime_power_decomposition(q))
    throw DomainError("paley_graph: " + std::to_string(q) + " is not a prime power");
  if (q % 4 != 1)
    throw DomainError("paley_graph: " + std::to_string(q) +
                      " is not 1 mod 4, so the residue set is not symmetric");
  const GaloisField field(q);
  const std::vector<bool> square = field.nonzero_squares();
  const auto n = static_cast<std::uint32_t>(q);
  SquareMatrix w(q);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (u != v && square[field.sub(u, v)]) w(u, v) = 1.0;
  return {std::move(w), "Paley" + std::to_string(q)};
}

InitiatorGraph shift_initiator(const InitiatorGraph& g, double alpha, double beta) {
  if (!(beta > 0.0)) throw DomainError("shift_initiator: beta must be positive");
  const std::size_t m = g.order();
  SquareMatrix w(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      w(u, v) = (g.weight(u, v) + (u == v ? alpha : 0.0)) / beta;
  return {std::move(w), g.label() + "+shift"};
}

namespace {

bool integer_weights(const SquareMatrix& w) {
  for (std::size_t u = 0; u < w.size(); ++u)
    for (std::size_t v = 0; v < w.size(); ++v)
      if (w(u, v) != std::round(w(u, v))) return false;
  return true;
}

}  // namespace

GraphProperties analyze(const InitiatorGraph& g) {
  const std::size_t m = g.order();
  const SquareMatrix& w = g.weights();
  GraphProperties props;

  std::vector<double> row_sum(m, 0.0);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) row_sum[u] += w(u, v);
  const bool exact = integer_weights(w);
  props.is_regular = std::all_of(row_sum.begin(), row_sum.end(), [&](double d) {
    if (exact) return d == row_sum[0];
    return std::abs(d - row_sum[0]) <= 1e-12 * std::max(std::abs(d), std::abs(row_sum[0]));
  });
  if (props.is_regular) props.degree = row_sum[0];

  // BFS 2-coloring over nonzero off-diagonal weights; any self-loop breaks
  // bipartiteness.
  std::vector<int> color(m, -1);
  bool bipartite = true;
  std::size_t components = 0;
  for (std::size_t start = 0; start < m; ++start) {
    if (color[start] != -1) continue;
    ++components;
    color[start] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      if (w(u, u) != 0.0) bipartite = false;
      for (std::size_t v = 0; v < m; ++v) {
        if (v == u || w(u, v) == 0.0) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          frontier.push(v);
        } else if (color[v] == color[u]) {
          bipartite = false;
        }
      }
    }
  }
  props.is_connected = components == 1;
  props.is_bipartite = bipartite;
  if (bipartite) {
    PartiteSets sets;
    for (std::size_t u = 0; u < m; ++u) (color[u] == 0 ? sets.first : sets.second).push_back(u);
    props.partite_sets = std::move(sets);
  }
  return props;
}

}  // namespace kronwalk
