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
#include <optional>
#include <vector>

#include "kronwalk/graph.hpp"
#include "kronwalk/kronecker_index.hpp"

namespace kronwalk {

/// Eigenvalues of the initiator that agree within the grouping tolerance,
/// together with an orthonormal basis of their eigenspace.
struct SpectralClass {
  double value = 0.0;
  std::size_t multiplicity = 0;
  std::vector<std::vector<double>> basis;  // multiplicity vectors of length M
};

struct InitiatorSpectrum {
  std::size_t order = 0;
  std::vector<SpectralClass> classes;  // value descending
  double principal_value = 0.0;
  bool principal_unique = false;
  bool regular = false;
  double trace = 0.0;
  // max_{c>1} |lambda_c| / lambda_1; only when the principal value is unique
  // and positive.
  std::optional<double> dominance;
  // 1 - lambda_2 / lambda_1; only for regular graphs with a unique principal.
  std::optional<double> normalized_connectivity;
};

/// Class-aggregated overlaps of initiator vertex u:
/// q_c = <u|P_c|u>, r_c = <u|P_c|s_M> with s_M uniform on M vertices.
struct OverlapTable {
  std::size_t marked_digit = 0;
  std::vector<double> q;
  std::vector<double> r;
};

struct KroneckerEntry {
  double value = 0.0;       // Lambda_d
  double normalized = 0.0;  // Lambda_d / Lambda_1
  std::uint64_t multiplicity = 0;
  double p = 0.0;  // ||P_d |w>||^2
  double a = 0.0;  // <w|P_d|s>
};

/// Distinct eigenvalues of A^{(x)j} with marked-vertex and start-state
/// overlaps. entries[0] is the principal entry.
struct KroneckerSpectrum {
  std::size_t j = 0;
  std::uint64_t n = 0;  // M^j
  double principal = 0.0;
  std::size_t initiator_classes = 0;
  KroneckerIndex marked;
  std::vector<KroneckerEntry> entries;
  // Largest value gap (relative to the running spectral radius) that was
  // absorbed when merging coincident products.
  double max_merge_gap = 0.0;

  /// Number of entries with p_d > 0, i.e. the reduced dimension.
  std::size_t coupled_dimension() const;
  /// sum_d a_d^2 / p_d over coupled entries: squared norm of the start
  /// state's projection onto span{P_d |w>}.
  double reachable_weight() const;
  double unreachable_weight() const { return 1.0 - reachable_weight(); }
  /// <w|s> = sum_d a_d.
  double start_overlap() const;
  /// max_{d>0} |normalized_d|.
  double non_principal_bound() const;
};

InitiatorSpectrum eigendecompose(const InitiatorGraph& g);

/// c_A. Throws DomainError when the principal eigenvalue is degenerate.
double dominance_ratio(const InitiatorSpectrum& s);

OverlapTable overlap_table(const InitiatorSpectrum& s, std::size_t u);

KroneckerSpectrum kronecker_spectrum(const InitiatorSpectrum& s, std::size_t j,
                                     const KroneckerIndex& marked);

/// 1 - lambda_2/lambda_1. Throws DomainError for irregular or disconnected
/// initiators.
double normalized_algebraic_connectivity(const InitiatorSpectrum& s);

}  // namespace kronwalk
