// Copyright 2026 The uct Authors
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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uct/cliques.hpp"
#include "uct/graph.hpp"

namespace uct {

using CliqueId = std::int32_t;

// Vertex-clique incidence graph: part X is the vertex set of the source graph,
// part Y its maximal cliques, x ~ y iff x belongs to clique y.
struct IncidenceGraph {
  std::size_t x_count = 0;
  std::vector<std::vector<Vertex>> members;     // y -> sorted member vertices
  std::vector<std::vector<CliqueId>> incident;  // x -> sorted incident cliques

  // Optional linear orders of X and Y (as sequences). When
  // `strong_biconvex` is set the pair is a strong biconvex ordering.
  std::optional<std::vector<Vertex>> order_x;
  std::optional<std::vector<CliqueId>> order_y;
  bool strong_biconvex = false;

  std::size_t y_count() const noexcept { return members.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t k = 0;
    for (const auto& y : members) k += y.size();
    return k;
  }

  bool adjacent(Vertex x, CliqueId y) const {
    const auto& inc = incident[static_cast<std::size_t>(x)];
    return std::binary_search(inc.begin(), inc.end(), y);
  }

  // Plain bipartite graph: X keeps ids 0..x_count-1, clique y becomes
  // vertex x_count + y.
  Graph as_graph() const {
    std::vector<Edge> edges;
    edges.reserve(edge_count());
    for (std::size_t y = 0; y < members.size(); ++y) {
      for (Vertex x : members[y]) edges.push_back({x, static_cast<Vertex>(x_count + y)});
    }
    return Graph(x_count + members.size(), edges);
  }
};

// Builds the incidence graph from the source graph and its clique list. Every
// vertex must lie in some listed clique and no clique may be empty.
inline IncidenceGraph build_incidence_graph(const Graph& g, const CliqueList& cliques) {
  if (!cliques.matches(g)) {
    throw std::invalid_argument("clique list was computed for a different graph");
  }
  IncidenceGraph b;
  b.x_count = g.n();
  b.members = cliques.cliques;
  b.incident.assign(g.n(), {});
  for (std::size_t y = 0; y < b.members.size(); ++y) {
    if (b.members[y].empty()) throw std::invalid_argument("empty clique in clique list");
    for (Vertex x : b.members[y]) {
      if (x < 0 || static_cast<std::size_t>(x) >= g.n()) {
        throw std::invalid_argument("clique member out of range");
      }
      b.incident[static_cast<std::size_t>(x)].push_back(static_cast<CliqueId>(y));
    }
  }
  for (std::size_t x = 0; x < g.n(); ++x) {
    if (b.incident[x].empty()) {
      throw std::invalid_argument("vertex " + std::to_string(x) + " lies in no listed clique");
    }
  }
  return b;
}

}  // namespace uct
