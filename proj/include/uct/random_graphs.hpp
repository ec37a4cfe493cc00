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

// Seeded random instances of the solver classes. All generators take the
// engine by reference so a suite can draw many graphs from one seed.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "uct/graph.hpp"

namespace uct {

using Rng = std::mt19937_64;

namespace detail {

inline std::vector<Vertex> random_labels(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph relabeled(std::size_t n, std::vector<Edge> edges, Rng& rng) {
  const auto perm = random_labels(n, rng);
  for (Edge& e : edges) {
    e.u = perm[static_cast<std::size_t>(e.u)];
    e.v = perm[static_cast<std::size_t>(e.v)];
  }
  return Graph(n, edges);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace detail

// G(n, p).
inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) {
      if (detail::coin(rng, p)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

// Clique on k vertices, each clique/independent pair joined with probability p.
inline Graph random_split_graph(std::size_t n, std::size_t k, double p, Rng& rng) {
  k = std::min(k, n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(k); ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(k); ++v) edges.push_back({u, v});
  }
  for (Vertex w = static_cast<Vertex>(k); w < static_cast<Vertex>(n); ++w) {
    for (Vertex u = 0; u < static_cast<Vertex>(k); ++u) {
      if (detail::coin(rng, p)) edges.push_back({u, w});
    }
  }
  return detail::relabeled(n, std::move(edges), rng);
}

// Split graph for large n: a k-clique and n - k independent vertices with up
// to `i_degree` random clique neighbors each. O(k^2 + n * i_degree).
inline Graph random_sparse_split_graph(std::size_t n, std::size_t k, std::size_t i_degree, Rng& rng) {
  k = std::min(k, n);
  std::vector<Edge> edges;
  edges.reserve(k * (k - (k > 0)) / 2 + (n - k) * i_degree);
  for (Vertex u = 0; u < static_cast<Vertex>(k); ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(k); ++v) edges.push_back({u, v});
  }
  if (k > 0) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(k) - 1);
    for (Vertex w = static_cast<Vertex>(k); w < static_cast<Vertex>(n); ++w) {
      for (std::size_t d = 0; d < i_degree; ++d) edges.push_back({pick(rng), w});
    }
  }
  return detail::relabeled(n, std::move(edges), rng);
}

// Unit interval model: n unit intervals with left ends uniform in
// [0, n / density); two vertices are adjacent iff their intervals meet.
// Expected degree is about 2 * density. O(n log n + m).
inline Graph random_unit_interval_graph(std::size_t n, double density, Rng& rng) {
  std::uniform_real_distribution<double> pos(0.0, static_cast<double>(n) / density);
  std::vector<double> left(n);
  for (double& x : left) x = pos(rng);
  std::sort(left.begin(), left.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && left[j] - left[i] <= 1.0; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return detail::relabeled(n, std::move(edges), rng);
}

// Random cotree: repeatedly merge two random parts by union or join (join
// with probability p_join).
inline Graph random_cograph(std::size_t n, double p_join, Rng& rng) {
  std::vector<std::vector<Vertex>> parts(n);
  for (std::size_t v = 0; v < n; ++v) parts[v] = {static_cast<Vertex>(v)};
  std::vector<Edge> edges;
  while (parts.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    while (b == a) b = pick(rng);
    if (detail::coin(rng, p_join)) {
      for (Vertex u : parts[a]) {
        for (Vertex v : parts[b]) edges.push_back({u, v});
      }
    }
    parts[a].insert(parts[a].end(), parts[b].begin(), parts[b].end());
    parts[b] = std::move(parts.back());
    parts.pop_back();
  }
  return detail::relabeled(n, std::move(edges), rng);
}

// Random forest: vertex v > 0 hangs below a uniform earlier vertex with
// probability p_attach, otherwise starts a new tree.
inline Graph random_forest(std::size_t n, double p_attach, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
    if (detail::coin(rng, p_attach)) {
      edges.push_back({std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v});
    }
  }
  return detail::relabeled(n, std::move(edges), rng);
}

// Triangle-free graph with minimum degree at least 2: random edges are added
// in shuffled order whenever they close no triangle. Returns nullopt if the
// result has a vertex of degree below 2 after `attempts` tries.
inline std::optional<Graph> random_triangle_free_min_degree2(std::size_t n, double p, Rng& rng,
                                                             int attempts = 100) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) all.push_back({u, v});
  }
  for (int t = 0; t < attempts; ++t) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<Edge> edges;
    for (const Edge& e : all) {
      if (!detail::coin(rng, p)) continue;
      bool closes = false;
      for (std::size_t w = 0; w < n && !closes; ++w) {
        closes = adj[static_cast<std::size_t>(e.u)][w] && adj[static_cast<std::size_t>(e.v)][w];
      }
      if (closes) continue;
      adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
      adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
      edges.push_back(e);
    }
    Graph g(n, edges);
    bool ok = true;
    for (Vertex v = 0; v < static_cast<Vertex>(n) && ok; ++v) ok = g.degree(v) >= 2;
    if (ok) return g;
  }
  return std::nullopt;
}

}  // namespace uct
