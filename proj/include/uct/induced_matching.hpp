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
#include <utility>
#include <vector>

#include "uct/incidence.hpp"

namespace uct {

struct InducedMatching {
  std::vector<std::pair<Vertex, CliqueId>> edges;  // in the order they were found
  std::vector<Vertex> saturated_x;                 // sorted
};

// Counters from one run of the matching sweep.
struct ChangTrace {
  std::size_t iterations = 0;
  std::size_t branch_counts[3] = {0, 0, 0};
};

namespace detail {

// Positions of X and Y in the given orders plus, per position, the first and
// last neighbor position on the other side.
struct OrderedIncidence {
  std::vector<Vertex> xs;
  std::vector<CliqueId> ys;
  std::vector<std::size_t> min_x, max_x;  // indexed by X position, values are Y positions
  std::vector<std::size_t> min_y, max_y;  // indexed by Y position, values are X positions
};

template <typename Id>
std::vector<std::size_t> permutation_positions(const std::vector<Id>& order, std::size_t size,
                                               const char* what) {
  if (order.size() != size) throw std::invalid_argument(std::string(what) + " has wrong size");
  std::vector<std::size_t> pos(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto id = static_cast<std::size_t>(order[i]);
    if (id >= size || pos[id] != size) throw std::invalid_argument(std::string(what) + " is not a permutation");
    pos[id] = i;
  }
  return pos;
}

// Requires every neighborhood to be a contiguous run of the opposite order and
// the run endpoints to be non-decreasing along both orders. Such an ordering
// is strong: for crossing edges x1 y2, x2 y1 (x1 < x2, y1 < y2),
// min(x1) <= min(x2) <= y1 < y2 <= max(x1) forces x1 y1, and symmetrically
// max(x2) >= max(x1) >= y2 forces x2 y2.
inline OrderedIncidence ordered_view(const IncidenceGraph& b) {
  if (!b.order_x || !b.order_y || !b.strong_biconvex) {
    throw std::invalid_argument("incidence graph has no strong biconvex ordering");
  }
  OrderedIncidence v;
  v.xs = *b.order_x;
  v.ys = *b.order_y;
  const auto pos_x = permutation_positions(v.xs, b.x_count, "order_x");
  const auto pos_y = permutation_positions(v.ys, b.y_count(), "order_y");
  const std::size_t nx = v.xs.size(), ny = v.ys.size();
  v.min_x.resize(nx);
  v.max_x.resize(nx);
  v.min_y.resize(ny);
  v.max_y.resize(ny);
  auto fail = [] { throw std::invalid_argument("ordering is not a monotone biconvex (strong) ordering"); };
  for (std::size_t i = 0; i < nx; ++i) {
    const auto& inc = b.incident[static_cast<std::size_t>(v.xs[i])];
    if (inc.empty()) fail();
    std::size_t lo = ny, hi = 0;
    for (CliqueId y : inc) {
      lo = std::min(lo, pos_y[static_cast<std::size_t>(y)]);
      hi = std::max(hi, pos_y[static_cast<std::size_t>(y)]);
    }
    if (hi - lo + 1 != inc.size()) fail();
    if (i > 0 && (lo < v.min_x[i - 1] || hi < v.max_x[i - 1])) fail();
    v.min_x[i] = lo;
    v.max_x[i] = hi;
  }
  for (std::size_t j = 0; j < ny; ++j) {
    const auto& mem = b.members[static_cast<std::size_t>(v.ys[j])];
    if (mem.empty()) fail();
    std::size_t lo = nx, hi = 0;
    for (Vertex x : mem) {
      lo = std::min(lo, pos_x[static_cast<std::size_t>(x)]);
      hi = std::max(hi, pos_x[static_cast<std::size_t>(x)]);
    }
    if (hi - lo + 1 != mem.size()) fail();
    if (j > 0 && (lo < v.min_y[j - 1] || hi < v.max_y[j - 1])) fail();
    v.min_y[j] = lo;
    v.max_y[j] = hi;
  }
  return v;
}

inline bool is_connected(const IncidenceGraph& b) {
  const std::size_t nx = b.x_count, ny = b.y_count();
  if (nx + ny == 0) return true;
  std::vector<char> seen_x(nx, 0), seen_y(ny, 0);
  std::vector<std::pair<bool, std::size_t>> queue;  // (is_y, id)
  if (nx > 0) {
    queue.push_back({false, 0});
    seen_x[0] = 1;
  } else {
    queue.push_back({true, 0});
    seen_y[0] = 1;
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const auto [is_y, id] = queue[h];
    if (is_y) {
      for (Vertex x : b.members[id]) {
        if (!seen_x[static_cast<std::size_t>(x)]) {
          seen_x[static_cast<std::size_t>(x)] = 1;
          queue.push_back({false, static_cast<std::size_t>(x)});
        }
      }
    } else {
      for (CliqueId y : b.incident[id]) {
        if (!seen_y[static_cast<std::size_t>(y)]) {
          seen_y[static_cast<std::size_t>(y)] = 1;
          queue.push_back({true, static_cast<std::size_t>(y)});
        }
      }
    }
  }
  return queue.size() == nx + ny;
}

}  // namespace detail

namespace detail {

// The sweep itself on a validated position view. Returns matched (X, Y)
// position pairs. See chang_induced_matching.
inline std::vector<std::pair<std::size_t, std::size_t>> chang_sweep(const OrderedIncidence& v,
                                                                    ChangTrace* trace) {
  const std::size_t s = v.xs.size() - 1, t = v.ys.size() - 1;
  if (v.max_x[s] != t) throw std::logic_error("chang_induced_matching: last X and last Y are not adjacent");

  std::vector<std::pair<std::size_t, std::size_t>> matched{{s, t}};
  std::size_t i = s, j = t;
  ChangTrace local;
  while (v.min_x[i] != 0 && v.min_y[j] != 0) {
    ++local.iterations;
    const std::size_t p = v.min_y[j];
    const std::size_t q = v.min_x[i];
    const bool a = v.min_x[p] < q && v.min_y[q] < p;
    const bool bb = v.min_x[p] == q && v.min_y[q] < p;
    const bool c = v.min_x[p] < q && v.min_y[q] == p;
    if (int(a) + int(bb) + int(c) != 1) {
      throw std::logic_error("chang_induced_matching: " + std::to_string(int(a) + int(bb) + int(c)) +
                             " branches apply at positions (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
    }
    if (a) {
      i = p - 1;
      j = q - 1;
      ++local.branch_counts[0];
    } else if (bb) {
      i = v.max_y[q - 1];
      j = q - 1;
      ++local.branch_counts[1];
    } else {
      i = p - 1;
      j = v.max_x[p - 1];
      ++local.branch_counts[2];
    }
    matched.push_back({i, j});
  }
  if (trace) *trace = local;
  return matched;
}

}  // namespace detail

// Maximum induced matching of a connected bipartite permutation graph given
// with a strong biconvex ordering, by Chang's backward sweep.
//
// Positions are 0-based here. The sweep starts from the last X and last Y
// position and repeatedly inspects p = min(y_j), q = min(x_i):
//   (a) min(x_p) < q and min(y_q) < p:  add (x_{p-1}, y_{q-1})
//   (b) min(x_p) = q and min(y_q) < p:  add (x_{max(y_{q-1})}, y_{q-1})
//   (c) min(x_p) < q and min(y_q) = p:  add (x_{p-1}, y_{max(x_{p-1})})
// until either current endpoint reaches the first position. On connected
// inputs exactly one case applies per step; anything else throws
// std::logic_error. When the graph has no isolated vertices and no two Y
// neighborhoods are comparable, the saturated X vertices dominate Y.
inline InducedMatching chang_induced_matching(const IncidenceGraph& b, ChangTrace* trace = nullptr) {
  const auto v = detail::ordered_view(b);
  if (b.edge_count() == 0) throw std::invalid_argument("chang_induced_matching: no edges");
  if (!detail::is_connected(b)) throw std::invalid_argument("chang_induced_matching: graph is disconnected");

  InducedMatching m;
  for (auto [xi, yj] : detail::chang_sweep(v, trace)) {
    m.edges.push_back({v.xs[xi], v.ys[yj]});
    m.saturated_x.push_back(v.xs[xi]);
  }
  std::sort(m.saturated_x.begin(), m.saturated_x.end());
  return m;
}

// Pairwise disjoint edges of `b` with no edge of `b` joining two of them.
inline bool is_induced_matching(const IncidenceGraph& b, const InducedMatching& m) {
  std::vector<int> partner_of_y(b.y_count(), -1);
  std::vector<char> used_x(b.x_count, 0);
  for (auto [x, y] : m.edges) {
    if (x < 0 || static_cast<std::size_t>(x) >= b.x_count || y < 0 ||
        static_cast<std::size_t>(y) >= b.y_count() || !b.adjacent(x, y)) {
      return false;
    }
    if (used_x[static_cast<std::size_t>(x)] || partner_of_y[static_cast<std::size_t>(y)] >= 0) return false;
    used_x[static_cast<std::size_t>(x)] = 1;
    partner_of_y[static_cast<std::size_t>(y)] = x;
  }
  for (auto [x, y] : m.edges) {
    for (CliqueId other : b.incident[static_cast<std::size_t>(x)]) {
      const int partner = partner_of_y[static_cast<std::size_t>(other)];
      if (partner >= 0 && partner != x) return false;
    }
  }
  return true;
}

// True if two matching edges cross under the incidence graph's orderings.
inline bool has_crossing_edges(const IncidenceGraph& b, const InducedMatching& m) {
  if (!b.order_x || !b.order_y) throw std::invalid_argument("has_crossing_edges: orderings missing");
  const auto pos_x = detail::permutation_positions(*b.order_x, b.x_count, "order_x");
  const auto pos_y = detail::permutation_positions(*b.order_y, b.y_count(), "order_y");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (auto [x, y] : m.edges) e.push_back({pos_x[static_cast<std::size_t>(x)], pos_y[static_cast<std::size_t>(y)]});
  std::sort(e.begin(), e.end());
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (e[k].second < e[k - 1].second) return true;
  }
  return false;
}

// Every Y vertex has a neighbor among `xs`.
inline bool dominates_y(const IncidenceGraph& b, std::span<const Vertex> xs) {
  std::vector<char> hit(b.y_count(), 0);
  for (Vertex x : xs) {
    for (CliqueId y : b.incident[static_cast<std::size_t>(x)]) hit[static_cast<std::size_t>(y)] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

}  // namespace uct
