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
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronwalk/symmetric_eigen.hpp"

namespace kronwalk {

/// Undirected weighted graph on M >= 2 vertices. Entry (u, v) of the weight
/// matrix is the edge weight; the diagonal holds self-loop weights.
class InitiatorGraph {
 public:
  /// Throws InvalidOrderError for M < 2 and DomainError for an asymmetric
  /// weight matrix.
  InitiatorGraph(SquareMatrix weights, std::string label);

  std::size_t order() const noexcept { return weights_.size(); }
  const SquareMatrix& weights() const noexcept { return weights_; }
  double weight(std::size_t u, std::size_t v) const { return weights_(u, v); }
  const std::string& label() const noexcept { return label_; }

  /// 0/1 weights with an empty diagonal.
  bool is_simple() const;

 private:
  SquareMatrix weights_;
  std::string label_;
};

struct PartiteSets {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

struct GraphProperties {
  bool is_regular = false;
  std::optional<double> degree;  // weighted row sum, set when regular
  bool is_connected = false;
  bool is_bipartite = false;
  std::optional<PartiteSets> partite_sets;  // set iff bipartite
};

InitiatorGraph complete_graph(std::size_t m);
InitiatorGraph cycle_graph(std::size_t m);
InitiatorGraph path_graph(std::size_t m);
/// K_{n,n}: vertices 0..n-1 form one side, n..2n-1 the other.
InitiatorGraph complete_bipartite_graph(std::size_t n);

/// Paley graph on GF(q), q a prime power with q = 1 (mod 4). Vertex i is the
/// field element with index i (see GaloisField); u ~ v iff u - v is a nonzero
/// square.
InitiatorGraph paley_graph(std::size_t q);

/// Parses "u v [weight]" lines with 0-based indices. An optional first
/// directive "M <order>" fixes the order; otherwise it is one more than the
/// largest index seen. Blank lines and lines starting with '#' are skipped.
/// Repeating an edge (in either orientation) is a FormatError.
InitiatorGraph from_edge_list(std::istream& source, std::string label = "edge-list");

/// (weights + alpha I) / beta. Throws DomainError unless beta > 0.
InitiatorGraph shift_initiator(const InitiatorGraph& g, double alpha, double beta);

GraphProperties analyze(const InitiatorGraph& g);

}  // namespace kronwalk
