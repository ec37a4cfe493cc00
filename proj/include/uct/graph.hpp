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
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uct/errors.hpp"

namespace uct {

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 in compressed adjacency form.
// Every neighbor list is strictly increasing. Immutable once built.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Duplicate edges (in either orientation) collapse to one; self-loops and
  // out-of-range endpoints throw std::invalid_argument.
  Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
    if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
      throw std::invalid_argument("vertex count too large");
    }
    std::vector<std::size_t> degree(n + 1, 0);
    for (const Edge& e : edges) {
      check_edge(e);
      ++degree[static_cast<std::size_t>(e.u)];
      ++degree[static_cast<std::size_t>(e.v)];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    targets_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges) {
      targets_[fill[static_cast<std::size_t>(e.u)]++] = e.v;
      targets_[fill[static_cast<std::size_t>(e.v)]++] = e.u;
    }
    // Sort and deduplicate each list, then compact.
    std::size_t write = 0;
    std::vector<std::size_t> new_offsets(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
      auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
      std::sort(first, last);
      last = std::unique(first, last);
      for (auto it = first; it != last; ++it) targets_[write++] = *it;
      new_offsets[v + 1] = write;
    }
    targets_.resize(write);
    targets_.shrink_to_fit();
    offsets_ = std::move(new_offsets);
    m_ = write / 2;
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  std::size_t degree(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return offsets_[i + 1] - offsets_[i];
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

  friend Graph relabeled_graph(const Graph& g, std::span<const Vertex> order);

 private:
  void check_edge(const Edge& e) const {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n_ ||
        static_cast<std::size_t>(e.v) >= n_) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// Subgraph induced by `vertices` (any order, no duplicates). Vertex i of the
// result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const Vertex j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  return Graph(vertices.size(), edges);
}

// The same graph with vertex order[i] renamed to i; `order` must be a
// permutation. Linear time: the new lists are filled in increasing id order,
// so they come out sorted without a comparison sort.
inline Graph relabeled_graph(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.n();
  if (order.size() != n) throw std::invalid_argument("relabeled_graph: order has wrong size");
  std::vector<Vertex> to_new(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(order[i]);
    if (v >= n || to_new[v] >= 0) throw std::invalid_argument("relabeled_graph: order is not a permutation");
    to_new[v] = static_cast<Vertex>(i);
  }
  Graph h;
  h.n_ = n;
  h.m_ = g.m_;
  h.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) h.offsets_[i + 1] = h.offsets_[i] + g.degree(order[i]);
  h.targets_.resize(g.targets_.size());
  std::vector<std::size_t> fill(h.offsets_.begin(), h.offsets_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      const auto j = static_cast<std::size_t>(to_new[static_cast<std::size_t>(w)]);
      h.targets_[fill[j]++] = static_cast<Vertex>(i);
    }
  }
  return h;
}

// Connected components, each sorted ascending, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < static_cast<Vertex>(g.n()); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    queue.assign(1, s);
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  return comps;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

// Parses exactly `count` non-negative integers separated by blanks.
inline bool parse_ints(std::string_view s, std::span<long long> out) {
  std::size_t k = 0;
  const char* p = s.data();
  const char* end = s.data() + s.size();
  while (p != end) {
    if (*p == ' ' || *p == '\t') {
      ++p;
      continue;
    }
    if (k == out.size()) return false;
    auto [next, ec] = std::from_chars(p, end, out[k]);
    if (ec != std::errc{} || (next != end && *next != ' ' && *next != '\t')) return false;
    ++k;
    p = next;
  }
  return k == out.size();
}

}  // namespace detail

// Edge-list document: header "n m", then m lines "u v". Lines starting with
// '#' and blank lines are skipped; CRLF is accepted.
inline Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    long long vals[2];
    if (!detail::parse_ints(line, vals)) {
      throw ParseError(line_no, have_header ? "expected \"u v\"" : "malformed header, expected \"n m\"");
    }
    if (!have_header) {
      if (vals[0] < 0 || vals[1] < 0 || vals[0] > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "malformed header, expected \"n m\"");
      }
      n = vals[0];
      m = vals[1];
      edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 24)));
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than declared in header");
    }
    if (vals[0] < 0 || vals[0] >= n || vals[1] < 0 || vals[1] >= n) {
      throw ParseError(line_no, "vertex id out of range");
    }
    if (vals[0] == vals[1]) throw ParseError(line_no, "self-loop");
    edges.push_back({static_cast<Vertex>(vals[0]), static_cast<Vertex>(vals[1])});
  }
  if (!have_header) throw ParseError(0, "missing header \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(0, "expected " + std::to_string(m) + " edge lines, found " +
                            std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// Space-separated ids, no trailing newline.
inline std::string join_ids(std::span<const Vertex> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (!g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

}  // namespace uct
