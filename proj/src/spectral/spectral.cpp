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

#include "kronwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "kronwalk/errors.hpp"
#include "kronwalk/symmetric_eigen.hpp"

namespace kronwalk {

namespace {

constexpr double kGroupTolerance = 1e-9;
constexpr double kMergeTolerance = 1e-9;
// Squared eigenvector mass at a vertex below this is roundoff of an exact zero.
constexpr double kOverlapFloor = 1e-24;

void orthonormalize(std::vector<std::vector<double>>& basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto& v = basis[k];
    for (std::size_t i = 0; i < k; ++i) {
      double dot = 0.0;
      for (std::size_t x = 0; x < v.size(); ++x) dot += v[x] * basis[i][x];
      for (std::size_t x = 0; x < v.size(); ++x) v[x] -= dot * basis[i][x];
    }
    double norm = 0.0;
    for (const double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericError("eigendecompose: eigenvectors lost rank in a class");
    for (double& x : v) x /= norm;
  }
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x)
    throw RangeError("Kronecker multiplicity overflows 64 bits");
  return x * y;
}

struct Partial {
  double value;
  std::uint64_t multiplicity;
  double p;
  double a;
};

}  // namespace

InitiatorSpectrum eigendecompose(const InitiatorGraph& g) {
  const SquareMatrix& w = g.weights();
  if (!w.is_symmetric()) throw DomainError("eigendecompose: weight matrix is not symmetric");
  const std::size_t m = g.order();
  const SymmetricEigen eig = jacobi_eigensolve(w);

  double radius = 0.0;
  for (const double v : eig.values) radius = std::max(radius, std::abs(v));
  const double tol = kGroupTolerance * std::max(1.0, radius);

  InitiatorSpectrum s;
  s.order = m;
  s.trace = w.trace();
  s.regular = analyze(g).is_regular;

  for (std::size_t k = 0; k < m;) {
    std::size_t end = k + 1;
    while (end < m && eig.values[end - 1] - eig.values[end] <= tol) ++end;
    SpectralClass cls;
    cls.multiplicity = end - k;
    double sum = 0.0;
    for (std::size_t i = k; i < end; ++i) {
      sum += eig.values[i];
      std::vector<double> v(m);
      for (std::size_t x = 0; x < m; ++x) v[x] = eig.vectors(x, i);
      cls.basis.push_back(std::move(v));
    }
    cls.value = sum / static_cast<double>(cls.multiplicity);
    orthonormalize(cls.basis);
    s.classes.push_back(std::move(cls));
    k = end;
  }

  s.principal_value = s.classes.front().value;
  s.principal_unique = s.classes.front().multiplicity == 1;
  if (s.principal_unique && s.principal_value > 0.0) {
    double largest = 0.0;
    for (std::size_t c = 1; c < s.classes.size(); ++c)
      largest = std::max(largest, std::abs(s.classes[c].value));
    s.dominance = largest / s.principal_value;
    if (s.regular && s.classes.size() > 1)
      s.normalized_connectivity = 1.0 - s.classes[1].value / s.principal_value;
  }
  return s;
}

double dominance_ratio(const InitiatorSpectrum& s) {
  if (!s.dominance)
    throw DomainError("dominance_ratio: principal eigenvalue is degenerate or non-positive");
  return *s.dominance;
}

double normalized_algebraic_connectivity(const InitiatorSpectrum& s) {
  if (!s.regular) throw DomainError("normalized_algebraic_connectivity: graph is not regular");
  if (!s.normalized_connectivity)
    throw DomainError("normalized_algebraic_connectivity: graph is disconnected (connectivity 0)");
  return *s.normalized_connectivity;
}

OverlapTable overlap_table(const InitiatorSpectrum& s, std::size_t u) {
  if (u >= s.order)
    throw RangeError("overlap_table: vertex " + std::to_string(u) + " out of range");
  const double uniform = 1.0 / std::sqrt(static_cast<double>(s.order));
  OverlapTable t;
  t.marked_digit = u;
  for (const SpectralClass& cls : s.classes) {
    double q = 0.0, r = 0.0;
    for (const auto& v : cls.basis) {
      double total = 0.0;
      for (const double x : v) total += x;
      q += v[u] * v[u];
      r += v[u] * total * uniform;
    }
    if (q < kOverlapFloor) {
      q = 0.0;
      r = 0.0;
    }
    t.q.push_back(q);
    t.r.push_back(r);
  }
  return t;
}

KroneckerSpectrum kronecker_spectrum(const InitiatorSpectrum& s, std::size_t j,
                                     const KroneckerIndex& marked) {
  if (j < 1) throw DomainError("kronecker_spectrum: j must be >= 1");
  if (marked.power() != j || marked.base != s.order)
    throw RangeError("kronecker_spectrum: marked index does not match (M, j)");
  for (const std::size_t d : marked.digits)
    if (d >= s.order) throw RangeError("kronecker_spectrum: marked digit out of range");

  KroneckerSpectrum ks;
  ks.j = j;
  ks.n = checked_power(s.order, j);
  ks.initiator_classes = s.classes.size();
  ks.marked = marked;

  double radius = 0.0;
  for (const auto& cls : s.classes) radius = std::max(radius, std::abs(cls.value));

  std::map<std::size_t, OverlapTable> tables;
  std::vector<Partial> state{{1.0, 1, 1.0, 1.0}};
  double scale = 1.0;
  for (const std::size_t digit : marked.digits) {
    auto it = tables.find(digit);
    if (it == tables.end()) it = tables.emplace(digit, overlap_table(s, digit)).first;
    const OverlapTable& table = it->second;
    scale *= radius;

    std::vector<Partial> next;
    next.reserve(state.size() * s.classes.size());
    for (const Partial& e : state)
      for (std::size_t c = 0; c < s.classes.size(); ++c)
        next.push_back({e.value * s.classes[c].value,
                        checked_mul(e.multiplicity, s.classes[c].multiplicity), e.p * table.q[c],
                        e.a * table.r[c]});
    std::stable_sort(next.begin(), next.end(),
                     [](const Partial& x, const Partial& y) { return x.value > y.value; });

    const double tol = kMergeTolerance * scale;
    state.clear();
    for (const Partial& e : next) {
      if (!state.empty() && state.back().value - e.value <= tol) {
        Partial& rep = state.back();
        if (scale > 0.0) ks.max_merge_gap = std::max(ks.max_merge_gap, (rep.value - e.value) / scale);
        rep.multiplicity += e.multiplicity;
        rep.p += e.p;
        rep.a += e.a;
      } else {
        state.push_back(e);
      }
    }
  }

  ks.principal = state.front().value;
  if (!(ks.principal > 0.0))
    throw DomainError("kronecker_spectrum: principal eigenvalue must be positive");
  for (const Partial& e : state)
    ks.entries.push_back({e.value, e.value / ks.principal, e.multiplicity, e.p, e.a});
  return ks;
}

std::size_t KroneckerSpectrum::coupled_dimension() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const KroneckerEntry& e) { return e.p > 0.0; }));
}

double KroneckerSpectrum::reachable_weight() const {
  double w = 0.0;
  for (const auto& e : entries)
    if (e.p > 0.0) w += e.a * e.a / e.p;
  return w;
}

double KroneckerSpectrum::start_overlap() const {
  double total = 0.0;
  for (const auto& e : entries) total += e.a;
  return total;
}

double KroneckerSpectrum::non_principal_bound() const {
  double c = 0.0;
  for (std::size_t d = 1; d < entries.size(); ++d) c = std::max(c, std::abs(entries[d].normalized));
  return c;
}

}  // namespace kronwalk
