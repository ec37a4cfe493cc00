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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "uct/graph.hpp"
#include "uct/recognize.hpp"
#include "uct/result.hpp"

namespace uct {

// Maximum minimal clique transversal of a split graph in O(n + m).
//
// The maximal cliques are N[w] for w in I, plus K when no I-vertex sees all
// of K. If K is not a maximal clique, I itself is optimal (value alpha = |I|).
// Otherwise the optimum is {v} + (I \ N(v)) for a K-vertex v with the fewest
// I-neighbors, of size |I| - delta + 1.
//
// Certificates: N[u] for u in I \ N(v); for v, N[w] with w its smallest
// I-neighbor (which sees no other member).
inline UctResult uct_split(const Graph& g, const SplitPartition& p) {
  try {
    validate(g, p);
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("uct_split: invalid partition: ") + e.what());
  }
  UctResult r;
  r.method = Method::split;
  if (!p.k_is_maximal_clique) {
    r.value = p.i_set.size();
    r.witness.vertices = p.i_set;
    for (Vertex u : p.i_set) r.witness.certificates.push_back({u, detail::closed_neighborhood(g, u)});
    return r;
  }

  const std::size_t k = p.k_set.size();
  Vertex best = -1;
  std::size_t best_count = 0;
  for (Vertex v : p.k_set) {
    const std::size_t i_neighbors = g.degree(v) - (k - 1);
    if (best < 0 || i_neighbors < best_count) {
      best = v;
      best_count = i_neighbors;
    }
  }

  std::vector<char> in_i(g.n(), 0), excluded(g.n(), 0);
  for (Vertex u : p.i_set) in_i[static_cast<std::size_t>(u)] = 1;
  Vertex private_neighbor = -1;
  for (Vertex w : g.neighbors(best)) {
    if (in_i[static_cast<std::size_t>(w)]) {
      excluded[static_cast<std::size_t>(w)] = 1;
      if (private_neighbor < 0) private_neighbor = w;
    }
  }
  for (Vertex u : p.i_set) {
    if (!excluded[static_cast<std::size_t>(u)]) r.witness.vertices.push_back(u);
  }
  r.witness.vertices.insert(
      std::upper_bound(r.witness.vertices.begin(), r.witness.vertices.end(), best), best);
  r.value = r.witness.vertices.size();
  for (Vertex u : r.witness.vertices) {
    if (u == best && private_neighbor < 0) {
      // best has no I-neighbor, so K is the only maximal clique through it.
      std::vector<Vertex> k_sorted = p.k_set;
      std::sort(k_sorted.begin(), k_sorted.end());
      r.witness.certificates.push_back({u, std::move(k_sorted)});
      continue;
    }
    const Vertex owner = u == best ? private_neighbor : u;
    r.witness.certificates.push_back({u, detail::closed_neighborhood(g, owner)});
  }
  return r;
}

}  // namespace uct
