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
#include <optional>
#include <span>
#include <vector>

#include "uct/graph.hpp"

namespace uct {

// Lexicographic breadth-first search by partition refinement, O(n + m).
//
// Returns the visit order. With `previous` empty, ties are broken by smallest
// vertex id. With `previous` a full vertex order, this is LexBFS+: among tied
// vertices the one appearing last in `previous` is taken.
//
// The unvisited vertices sit in one doubly linked list cut into contiguous
// classes. Each class is kept sorted by tie priority: the initial list is in
// priority order, a visited vertex's neighbors are scanned in priority order
// and appended to the tail of the new class in front of their old one, and
// removal preserves the order of what stays behind.
inline std::vector<Vertex> lex_bfs(const Graph& g, std::span<const Vertex> previous = {}) {
  const std::size_t n = g.n();
  std::vector<Vertex> order;
  order.reserve(n);
  if (n == 0) return order;

  // priority[i] = vertex with i-th highest tie priority.
  std::vector<Vertex> priority(n);
  if (previous.empty()) {
    for (std::size_t i = 0; i < n; ++i) priority[i] = static_cast<Vertex>(i);
  } else {
    if (previous.size() != n) throw std::invalid_argument("lex_bfs: previous order has wrong size");
    std::reverse_copy(previous.begin(), previous.end(), priority.begin());
  }

  // Neighbor lists in priority order. When priority is ascending or
  // descending id the graph's own lists are walked forward or backward;
  // otherwise one bucket pass re-sorts them.
  bool ascending = true, descending = true;
  for (std::size_t i = 0; i < n && (ascending || descending); ++i) {
    ascending = ascending && priority[i] == static_cast<Vertex>(i);
    descending = descending && priority[i] == static_cast<Vertex>(n - 1 - i);
  }
  std::vector<std::size_t> offs;
  std::vector<Vertex> adj;
  if (!ascending && !descending) {
    offs.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offs[v + 1] = offs[v] + g.degree(static_cast<Vertex>(v));
    adj.resize(offs[n]);
    std::vector<std::size_t> fill(offs.begin(), offs.end() - 1);
    for (Vertex w : priority) {
      for (Vertex v : g.neighbors(w)) adj[fill[static_cast<std::size_t>(v)]++] = w;
    }
  }
  auto for_each_neighbor = [&](int v, auto&& visit) {
    if (ascending) {
      for (Vertex w : g.neighbors(v)) visit(w);
    } else if (descending) {
      const auto nb = g.neighbors(v);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) visit(*it);
    } else {
      const auto i = static_cast<std::size_t>(v);
      for (std::size_t k = offs[i]; k < offs[i + 1]; ++k) visit(adj[k]);
    }
  };

  constexpr int kNone = -1;
  // Per-vertex state kept together so one neighbor costs one cache line.
  struct Node {
    int next;
    int prev;
    int cls;  // -1 once visited
    int pad;
  };
  std::vector<Node> node(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& x = node[static_cast<std::size_t>(priority[i])];
    x.prev = i == 0 ? kNone : priority[i - 1];
    x.next = i + 1 == n ? kNone : priority[i + 1];
    x.cls = 0;
    x.pad = 0;
  }
  // Classes: head vertex, size, neighbours in the class list, split stamp.
  struct Class {
    int head;
    int size;
    int prev;
    int next;
    int stamp;
    int split;
  };
  std::vector<Class> classes;
  classes.reserve(n + 1);
  classes.push_back({priority[0], static_cast<int>(n), kNone, kNone, kNone, kNone});
  int first_class = 0;

  auto unlink_vertex = [&](int v) {
    Node& x = node[static_cast<std::size_t>(v)];
    if (x.prev != kNone) node[static_cast<std::size_t>(x.prev)].next = x.next;
    if (x.next != kNone) node[static_cast<std::size_t>(x.next)].prev = x.prev;
    x.prev = x.next = kNone;
  };
  auto insert_before = [&](int v, int at) {
    Node& x = node[static_cast<std::size_t>(v)];
    Node& y = node[static_cast<std::size_t>(at)];
    x.prev = y.prev;
    x.next = at;
    if (y.prev != kNone) node[static_cast<std::size_t>(y.prev)].next = v;
    y.prev = v;
  };
  auto drop_class_if_empty = [&](int c) {
    Class& k = classes[static_cast<std::size_t>(c)];
    if (k.size != 0) return;
    if (k.prev != kNone) classes[static_cast<std::size_t>(k.prev)].next = k.next;
    else first_class = k.next;
    if (k.next != kNone) classes[static_cast<std::size_t>(k.next)].prev = k.prev;
  };

  for (int step = 0; step < static_cast<int>(n); ++step) {
    const int fc = first_class;
    const int v = classes[static_cast<std::size_t>(fc)].head;
    classes[static_cast<std::size_t>(fc)].head = node[static_cast<std::size_t>(v)].next;
    --classes[static_cast<std::size_t>(fc)].size;
    unlink_vertex(v);
    node[static_cast<std::size_t>(v)].cls = kNone;
    drop_class_if_empty(fc);
    order.push_back(v);

    for_each_neighbor(v, [&](const Vertex w) {
      Node& xw = node[static_cast<std::size_t>(w)];
      const int c = xw.cls;
      if (c == kNone) return;
      if (classes[static_cast<std::size_t>(c)].stamp != step) {
        const int nc = static_cast<int>(classes.size());
        const int before = classes[static_cast<std::size_t>(c)].prev;
        classes.push_back({kNone, 0, before, c, kNone, kNone});
        if (before != kNone) classes[static_cast<std::size_t>(before)].next = nc;
        else first_class = nc;
        classes[static_cast<std::size_t>(c)].prev = nc;
        classes[static_cast<std::size_t>(c)].split = nc;
        classes[static_cast<std::size_t>(c)].stamp = step;
      }
      Class& old_class = classes[static_cast<std::size_t>(c)];
      const int nc = old_class.split;
      if (old_class.head == w) {
        old_class.head = xw.next;
      } else {
        unlink_vertex(w);
        insert_before(w, old_class.head);
      }
      --old_class.size;
      Class& new_class = classes[static_cast<std::size_t>(nc)];
      if (new_class.size == 0) new_class.head = w;
      ++new_class.size;
      xw.cls = nc;
      drop_class_if_empty(c);
    });
  }
  return order;
}

// Position of each vertex in `order`.
inline std::vector<std::size_t> positions(std::span<const Vertex> order) {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = i;
  return pos;
}

// For each vertex, its neighbors visited before it and the latest of those
// (its parent), relative to a visit order.
struct EarlierNeighbors {
  std::vector<std::size_t> count;
  std::vector<Vertex> parent;  // -1 when count is 0
};

inline EarlierNeighbors earlier_neighbors(const Graph& g, std::span<const Vertex> order) {
  const auto pos = positions(order);
  EarlierNeighbors out{std::vector<std::size_t>(g.n(), 0), std::vector<Vertex>(g.n(), -1)};
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    const std::size_t pv = pos[static_cast<std::size_t>(v)];
    std::size_t best = 0;
    for (Vertex w : g.neighbors(v)) {
      const std::size_t pw = pos[static_cast<std::size_t>(w)];
      if (pw < pv) {
        ++out.count[static_cast<std::size_t>(v)];
        if (out.parent[static_cast<std::size_t>(v)] < 0 || pw > best) {
          best = pw;
          out.parent[static_cast<std::size_t>(v)] = w;
        }
      }
    }
  }
  return out;
}

// True iff the reverse of `order` is a perfect elimination ordering, i.e. the
// earlier neighbors of every vertex form a clique. Linear time: it suffices
// that earlier(v) minus parent(v) lies inside earlier(parent(v)).
inline bool is_reverse_peo(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.n();
  const auto pos = positions(order);
  const auto earlier = earlier_neighbors(g, order);
  // Group the children by parent so each parent's neighborhood is marked once.
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    const Vertex p = earlier.parent[static_cast<std::size_t>(v)];
    if (p >= 0) children[static_cast<std::size_t>(p)].push_back(v);
  }
  std::vector<Vertex> mark(n, -1);
  for (Vertex p = 0; p < static_cast<Vertex>(n); ++p) {
    if (children[static_cast<std::size_t>(p)].empty()) continue;
    const std::size_t pp = pos[static_cast<std::size_t>(p)];
    for (Vertex w : g.neighbors(p)) {
      if (pos[static_cast<std::size_t>(w)] < pp) mark[static_cast<std::size_t>(w)] = p;
    }
    for (Vertex v : children[static_cast<std::size_t>(p)]) {
      const std::size_t pv = pos[static_cast<std::size_t>(v)];
      for (Vertex w : g.neighbors(v)) {
        if (w == p || pos[static_cast<std::size_t>(w)] >= pv) continue;
        if (mark[static_cast<std::size_t>(w)] != p) return false;
      }
    }
  }
  return true;
}

// Lex-BFS visit order whose reverse is a perfect elimination ordering, or
// nullopt if the graph is not chordal.
inline std::optional<std::vector<Vertex>> chordal_visit_order(const Graph& g) {
  auto order = lex_bfs(g);
  if (!is_reverse_peo(g, order)) return std::nullopt;
  return order;
}

inline bool is_chordal(const Graph& g) { return chordal_visit_order(g).has_value(); }

// Maximal cliques of a chordal graph given a visit order whose reverse is a
// PEO. Candidate clique of v is v plus its earlier neighbors; it is maximal
// unless some w has parent v and exactly one more earlier neighbor than v.
// At most n cliques; each returned sorted, in visit order of their last vertex.
inline std::vector<std::vector<Vertex>> chordal_maximal_cliques(const Graph& g,
                                                                std::span<const Vertex> order) {
  const std::size_t n = g.n();
  const auto pos = positions(order);
  const auto earlier = earlier_neighbors(g, order);
  std::vector<char> dominated(n, 0);
  for (Vertex w = 0; w < static_cast<Vertex>(n); ++w) {
    const Vertex p = earlier.parent[static_cast<std::size_t>(w)];
    if (p >= 0 && earlier.count[static_cast<std::size_t>(w)] ==
                      earlier.count[static_cast<std::size_t>(p)] + 1) {
      dominated[static_cast<std::size_t>(p)] = 1;
    }
  }
  std::vector<std::vector<Vertex>> cliques;
  for (Vertex v : order) {
    if (dominated[static_cast<std::size_t>(v)]) continue;
    std::vector<Vertex> c{v};
    const std::size_t pv = pos[static_cast<std::size_t>(v)];
    for (Vertex w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] < pv) c.push_back(w);
    }
    std::sort(c.begin(), c.end());
    cliques.push_back(std::move(c));
  }
  return cliques;
}

}  // namespace uct
