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

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "kronwalk/errors.hpp"
#include "kronwalk/graph.hpp"

namespace kronwalk {

namespace {

struct EdgeLine {
  std::size_t u;
  std::size_t v;
  double weight;
  std::size_t line;
};

std::string at_line(std::size_t line) { return " (line " + std::to_string(line) + ")"; }

}  // namespace

InitiatorGraph from_edge_list(std::istream& source, std::string label) {
  std::optional<std::size_t> declared_order;
  std::vector<EdgeLine> edges;
  std::string text;
  std::size_t line_no = 0;

  while (std::getline(source, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;

    std::istringstream fields(text);
    std::string head;
    fields >> head;
    if (head == "M") {
      if (declared_order || !edges.empty())
        throw FormatError("order directive must appear once, before any edge" + at_line(line_no));
      long long m = -1;
      if (!(fields >> m) || m < 0) throw FormatError("malformed order directive" + at_line(line_no));
      declared_order = static_cast<std::size_t>(m);
    } else {
      long long u = -1, v = -1;
      double weight = 1.0;
      std::istringstream pair(text);
      if (!(pair >> u >> v) || u < 0 || v < 0)
        throw FormatError("expected 'u v [weight]'" + at_line(line_no));
      if (!(pair >> weight)) {
        if (!pair.eof()) throw FormatError("malformed weight" + at_line(line_no));
        weight = 1.0;
      }
      std::string extra;
      if (pair.clear(), pair >> extra) throw FormatError("trailing fields" + at_line(line_no));
      edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), weight, line_no});
    }
  }

  std::size_t m = 0;
  if (declared_order) {
    m = *declared_order;
  } else {
    for (const auto& e : edges) m = std::max({m, e.u + 1, e.v + 1});
  }
  if (m < 2) throw InvalidOrderError("edge list describes fewer than 2 vertices");

  SquareMatrix w(m);
  std::map<std::pair<std::size_t, std::size_t>, double> seen;
  for (const auto& e : edges) {
    if (e.u >= m || e.v >= m)
      throw RangeError("vertex index out of range for order " + std::to_string(m) + at_line(e.line));
    const auto key = std::minmax(e.u, e.v);
    if (const auto it = seen.find(key); it != seen.end()) {
      if (it->second != e.weight)
        throw FormatError("edge repeated with conflicting weight" + at_line(e.line));
      throw FormatError("duplicate edge" + at_line(e.line));
    }
    seen.emplace(key, e.weight);
    w(e.u, e.v) = e.weight;
    w(e.v, e.u) = e.weight;
  }
  return {std::move(w), std::move(label)};
}

}  // namespace kronwalk
