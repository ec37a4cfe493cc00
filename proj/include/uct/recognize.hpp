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
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uct/graph.hpp"
#include "uct/lexbfs.hpp"

namespace uct {

// ---------------------------------------------------------------------------
// Split graphs

// Partition into a clique K and an independent set I, normalized so that I is
// a maximal independent set.
struct SplitPartition {
  std::vector<Vertex> k_set;  // sorted
  std::vector<Vertex> i_set;  // sorted
  bool k_is_maximal_clique = false;
};

// Throws std::logic_error if `p` is not a valid normalized partition of `g`.
inline void validate(const Graph& g, const SplitPartition& p) {
  const std::size_t n = g.n();
  if (p.k_set.size() + p.i_set.size() != n) throw std::logic_error("split partition: sizes");
  std::vector<char> side(n, 2);  // 0 = K, 1 = I
  for (Vertex v : p.k_set) side[static_cast<std::size_t>(v)] = 0;
  for (Vertex v : p.i_set) {
    if (side[static_cast<std::size_t>(v)] == 0) throw std::logic_error("split partition: overlap");
    side[static_cast<std::size_t>(v)] = 1;
  }
  const std::size_t k = p.k_set.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] == 2) throw std::logic_error("split partition: vertex missing");
    std::size_t in_k = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) in_k += side[static_cast<std::size_t>(w)] == 0;
    if (side[v] == 0) {
      if (in_k != k - 1) throw std::logic_error("split partition: K is not a clique");
      if (g.degree(static_cast<Vertex>(v)) == in_k) {
        throw std::logic_error("split partition: I is not maximal");
      }
    } else {
      if (in_k != g.degree(static_cast<Vertex>(v))) {
        throw std::logic_error("split partition: I is not independent");
      }
    }
  }
  // K is a maximal clique iff no I-vertex is adjacent to all of K.
  bool k_max = !p.k_set.empty();
  if (k_max) {
    for (Vertex v : p.i_set) {
      if (g.degree(v) == k) {
        k_max = false;
        break;
      }
    }
  }
  if (k_max != p.k_is_maximal_clique) throw std::logic_error("split partition: maximality flag");
}

// Hammer-Simeone degree-sequence test. With degrees sorted non-increasingly
// (ties by smallest id) and t the largest index with d_t >= t - 1, the graph
// is split iff sum_{i<=t} d_i = t(t-1) + sum_{i>t} d_i, and then the first t
// vertices form a clique. Afterwards a K-vertex with no I-neighbor is moved
// to I (at most one exists once I is nonempty). O(n + m).
inline SplitPartition split_partition(const Graph& g) {
  const std::size_t n = g.n();
  SplitPartition p;
  if (n == 0) return p;
  // Counting sort by degree, descending; stable keeps ids ascending in ties.
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(static_cast<Vertex>(v)));
  std::vector<std::size_t> bucket(max_deg + 2, 0);
  for (std::size_t v = 0; v < n; ++v) ++bucket[max_deg - g.degree(static_cast<Vertex>(v)) + 1];
  for (std::size_t d = 1; d < bucket.size(); ++d) bucket[d] += bucket[d - 1];
  std::vector<Vertex> sorted(n);
  for (std::size_t v = 0; v < n; ++v) {
    sorted[bucket[max_deg - g.degree(static_cast<Vertex>(v))]++] = static_cast<Vertex>(v);
  }
  std::size_t t = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (g.degree(sorted[i - 1]) + 1 >= i) t = i;
  }
  std::uint64_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < t ? head : tail) += g.degree(sorted[i]);
  if (head != static_cast<std::uint64_t>(t) * (t - 1) + tail) {
    throw RecognitionError("not a split graph");
  }
  std::vector<char> in_k(n, 0);
  for (std::size_t i = 0; i < t; ++i) in_k[static_cast<std::size_t>(sorted[i])] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_k[v]) continue;
    bool has_i_neighbor = false;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (!in_k[static_cast<std::size_t>(w)]) {
        has_i_neighbor = true;
        break;
      }
    }
    if (!has_i_neighbor) {
      in_k[v] = 0;
      break;
    }
  }
  for (std::size_t v = 0; v < n; ++v) (in_k[v] ? p.k_set : p.i_set).push_back(static_cast<Vertex>(v));
  p.k_is_maximal_clique = !p.k_set.empty();
  for (Vertex v : p.i_set) {
    if (g.degree(v) == p.k_set.size()) {
      p.k_is_maximal_clique = false;
      break;
    }
  }
  validate(g, p);
  return p;
}

inline bool is_split(const Graph& g) {
  try {
    split_partition(g);
    return true;
  } catch (const RecognitionError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Proper interval graphs

// Left-endpoint order of a proper interval representation: every closed
// neighborhood (and hence every maximal clique) is a contiguous block.
struct ProperIntervalOrder {
  std::vector<Vertex> order;
};

// True iff every closed neighborhood is contiguous in `order`.
inline bool has_consecutive_closed_neighborhoods(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.n()) return false;
  const auto pos = positions(order);
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    std::size_t lo = pos[static_cast<std::size_t>(v)], hi = lo;
    for (Vertex w : g.neighbors(v)) {
      lo = std::min(lo, pos[static_cast<std::size_t>(w)]);
      hi = std::max(hi, pos[static_cast<std::size_t>(w)]);
    }
    if (hi - lo != g.degree(v)) return false;
  }
  return true;
}

namespace detail {

// Breadth-first order over all components, roots by smallest id.
inline std::vector<Vertex> bfs_order(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h) {
      for (Vertex w : g.neighbors(order[h])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

// g relabeled to a local copy plus an order of the copy that passed the
// consecutive-neighborhood check. label[i] is the g-vertex of copy vertex i.
struct LocalIntervalOrder {
  Graph graph;
  std::vector<Vertex> label;
  std::vector<Vertex> order;
};

inline LocalIntervalOrder local_interval_order(const Graph& g) {
  const std::size_t n = g.n();
  // Random labels make every sweep miss cache once the per-vertex arrays
  // outgrow it. A BFS order is close to an interval order, so the copy has
  // nearly banded neighbor lists. The first sweep still breaks ties by
  // g-id, so the order found is the one a sweep of g itself would give.
  const auto bfs = bfs_order(g);
  const Graph h0 = relabeled_graph(g, bfs);
  // LexBFS+ takes the tied vertex that comes last in `previous`.
  std::vector<Vertex> by_g_id_desc(n);
  for (std::size_t i = 0; i < n; ++i) by_g_id_desc[n - 1 - static_cast<std::size_t>(bfs[i])] = static_cast<Vertex>(i);
  const auto first = lex_bfs(h0, by_g_id_desc);
  LocalIntervalOrder out{relabeled_graph(h0, first), std::vector<Vertex>(n), {}};
  for (std::size_t i = 0; i < n; ++i) out.label[i] = bfs[static_cast<std::size_t>(first[i])];
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  const auto second = lex_bfs(out.graph, identity);
  out.order = lex_bfs(out.graph, second);
  if (!has_consecutive_closed_neighborhoods(out.graph, out.order)) {
    throw RecognitionError("not a proper interval graph");
  }
  return out;
}

}  // namespace detail

// Three Lex-BFS sweeps (plain, then two LexBFS+ passes each breaking ties by
// the previous sweep). The last sweep is checked for contiguous closed
// neighborhoods; the check is what certifies the result. O(n + m).
inline ProperIntervalOrder proper_interval_order(const Graph& g) {
  const auto local = detail::local_interval_order(g);
  ProperIntervalOrder out;
  out.order.reserve(g.n());
  for (Vertex v : local.order) out.order.push_back(local.label[static_cast<std::size_t>(v)]);
  return out;
}

inline bool is_proper_interval(const Graph& g) {
  try {
    proper_interval_order(g);
    return true;
  } catch (const RecognitionError&) {
    return false;
  }
}

// Maximal cliques of a proper interval graph as position ranges [first, last]
// of `order`, strictly increasing in both endpoints. Vertex at position i
// reaches right to reach[i]; a block starting at i is maximal iff reach[i]
// exceeds reach[i-1].
struct CliqueBlock {
  std::size_t first;
  std::size_t last;
};

inline std::vector<CliqueBlock> proper_interval_clique_blocks(const Graph& g,
                                                              std::span<const Vertex> order) {
  const auto pos = positions(order);
  std::vector<CliqueBlock> blocks;
  std::size_t prev_reach = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t reach = i;
    for (Vertex w : g.neighbors(order[i])) reach = std::max(reach, pos[static_cast<std::size_t>(w)]);
    if (i == 0 || reach > prev_reach) blocks.push_back({i, reach});
    prev_reach = std::max(prev_reach, reach);
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Cographs

// Full binary union/join tree whose leaves are the vertices.
struct Cotree {
  enum class Kind : std::uint8_t { leaf, union_, join };
  struct Node {
    Kind kind;
    Vertex vertex;  // leaves only
    int left;       // internal nodes only
    int right;
  };
  std::vector<Node> nodes;
  int root = -1;
};

// "(U (J 0 1) (J 2 3))" style expression.
inline std::string to_string(const Cotree& t) {
  std::string out;
  if (t.root < 0) return "()";
  // Iterative pre-order so deep trees don't exhaust the stack.
  std::vector<std::pair<int, int>> stack{{t.root, 0}};
  while (!stack.empty()) {
    auto& [id, state] = stack.back();
    const auto& node = t.nodes[static_cast<std::size_t>(id)];
    if (node.kind == Cotree::Kind::leaf) {
      out += std::to_string(node.vertex);
      stack.pop_back();
      if (!stack.empty()) out += stack.back().second == 1 ? " " : "";
      continue;
    }
    if (state == 0) {
      out += node.kind == Cotree::Kind::union_ ? "(U " : "(J ";
      state = 1;
      stack.push_back({node.left, 0});
    } else if (state == 1) {
      state = 2;
      stack.push_back({node.right, 0});
    } else {
      out += ')';
      stack.pop_back();
      if (!stack.empty()) out += stack.back().second == 1 ? " " : "";
    }
  }
  return out;
}

// Materializes the edge set described by the cotree (u < v, sorted). Quadratic
// in the worst case; meant for certification on small graphs.
inline std::vector<Edge> evaluate(const Cotree& t) {
  std::vector<Edge> edges;
  if (t.root < 0) return edges;
  std::vector<std::vector<Vertex>> leaves(t.nodes.size());
  // Children always have larger ids than their parent, so a reverse sweep is
  // a valid bottom-up order.
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    const auto& node = t.nodes[i];
    if (node.kind == Cotree::Kind::leaf) {
      leaves[i] = {node.vertex};
      continue;
    }
    auto& l = leaves[static_cast<std::size_t>(node.left)];
    auto& r = leaves[static_cast<std::size_t>(node.right)];
    if (node.kind == Cotree::Kind::join) {
      for (Vertex a : l)
        for (Vertex b : r) edges.push_back({std::min(a, b), std::max(a, b)});
    }
    leaves[i] = std::move(l);
    leaves[i].insert(leaves[i].end(), r.begin(), r.end());
    r.clear();
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace detail {

// Induced P4 a-b-c-d inside vertex set `set` (marked with `stamp` in `mark`),
// searched edge by edge. Any set whose induced subgraph and its complement
// are both connected (and has >= 2 vertices) contains one.
inline std::vector<Vertex> find_induced_p4(const Graph& g, const std::vector<Vertex>& set,
                                           const std::vector<int>& mark, int stamp) {
  std::vector<int> seen(g.n(), -1);
  int tick = 0;
  auto in_set = [&](Vertex v) { return mark[static_cast<std::size_t>(v)] == stamp; };
  for (Vertex b : set) {
    for (Vertex c : g.neighbors(b)) {
      if (!in_set(c) || c < b) continue;
      for (int orient = 0; orient < 2; ++orient) {
        const Vertex x = orient ? c : b;  // middle vertex adjacent to `a`
        const Vertex y = orient ? b : c;  // middle vertex adjacent to `d`
        // D: neighbors of y in set, not adjacent to x and not x.
        std::vector<Vertex> d_side;
        ++tick;
        for (Vertex w : g.neighbors(x)) seen[static_cast<std::size_t>(w)] = tick;
        for (Vertex w : g.neighbors(y)) {
          if (w != x && in_set(w) && seen[static_cast<std::size_t>(w)] != tick) d_side.push_back(w);
        }
        if (d_side.empty()) continue;
        for (Vertex a : g.neighbors(x)) {
          if (a == y || !in_set(a) || g.adjacent(a, y)) continue;
          ++tick;
          for (Vertex w : g.neighbors(a)) seen[static_cast<std::size_t>(w)] = tick;
          for (Vertex d : d_side) {
            if (seen[static_cast<std::size_t>(d)] != tick) return {a, x, y, d};
          }
        }
      }
    }
  }
  return {};
}

}  // namespace detail

// Recursive decomposition: a vertex set splits into the components of its
// induced subgraph (union node) or of the complement (join node). Parts are
// ordered by smallest vertex and combined into a left-deep chain. Works with
// an explicit stack; O(n (n + m)) worst case.
inline Cotree build_cotree(const Graph& g) {
  Cotree t;
  const std::size_t n = g.n();
  if (n == 0) return t;
  std::vector<int> mark(n, -1);
  std::vector<int> seen(n, -1);
  int stamp = 0;

  struct Task {
    std::vector<Vertex> set;  // sorted
    int node;
  };
  t.nodes.push_back({});
  t.root = 0;
  std::vector<Task> work;
  {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    work.push_back({std::move(all), 0});
  }

  // Components of G[set] (complement = false) or of its complement.
  auto parts_of = [&](const std::vector<Vertex>& set, bool complement) {
    ++stamp;
    for (Vertex v : set) mark[static_cast<std::size_t>(v)] = stamp;
    std::vector<std::vector<Vertex>> parts;
    if (!complement) {
      for (Vertex s : set) {
        if (seen[static_cast<std::size_t>(s)] == stamp) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = stamp;
        for (std::size_t h = 0; h < comp.size(); ++h) {
          for (Vertex w : g.neighbors(comp[h])) {
            if (mark[static_cast<std::size_t>(w)] == stamp && seen[static_cast<std::size_t>(w)] != stamp) {
              seen[static_cast<std::size_t>(w)] = stamp;
              comp.push_back(w);
            }
          }
        }
        std::sort(comp.begin(), comp.end());
        parts.push_back(std::move(comp));
      }
    } else {
      // Complement BFS over a list of unreached vertices: each scan either
      // reaches a vertex or is charged to an edge, so O(|set| + m(set)).
      std::vector<Vertex> unreached(set.rbegin(), set.rend());
      std::vector<int> adj_tick(n, -1);
      int tick = 0;
      while (!unreached.empty()) {
        std::vector<Vertex> comp{unreached.back()};
        unreached.pop_back();
        for (std::size_t h = 0; h < comp.size(); ++h) {
          ++tick;
          for (Vertex w : g.neighbors(comp[h])) adj_tick[static_cast<std::size_t>(w)] = tick;
          std::vector<Vertex> keep;
          for (Vertex u : unreached) {
            if (adj_tick[static_cast<std::size_t>(u)] == tick) keep.push_back(u);
            else comp.push_back(u);
          }
          unreached = std::move(keep);
        }
        std::sort(comp.begin(), comp.end());
        parts.push_back(std::move(comp));
      }
      std::sort(parts.begin(), parts.end());
    }
    return parts;
  };

  while (!work.empty()) {
    Task task = std::move(work.back());
    work.pop_back();
    if (task.set.size() == 1) {
      t.nodes[static_cast<std::size_t>(task.node)] = {Cotree::Kind::leaf, task.set[0], -1, -1};
      continue;
    }
    Cotree::Kind kind = Cotree::Kind::union_;
    auto parts = parts_of(task.set, false);
    if (parts.size() == 1) {
      kind = Cotree::Kind::join;
      parts = parts_of(task.set, true);
      if (parts.size() == 1) {
        ++stamp;
        for (Vertex v : task.set) mark[static_cast<std::size_t>(v)] = stamp;
        auto p4 = detail::find_induced_p4(g, task.set, mark, stamp);
        const std::string what = "not a cograph: induced P4 " + join_ids(p4);
        throw RecognitionError(what, std::move(p4));
      }
    }
    // Left-deep chain: node = (((p0 p1) p2) ... p_{k-1}).
    int current = task.node;
    for (std::size_t i = parts.size() - 1; i >= 1; --i) {
      const int right = static_cast<int>(t.nodes.size());
      t.nodes.push_back({});
      work.push_back({std::move(parts[i]), right});
      int left;
      if (i == 1) {
        left = static_cast<int>(t.nodes.size());
        t.nodes.push_back({});
        work.push_back({std::move(parts[0]), left});
      } else {
        left = static_cast<int>(t.nodes.size());
        t.nodes.push_back({});
      }
      t.nodes[static_cast<std::size_t>(current)] = {kind, -1, left, right};
      current = left;
    }
  }
  return t;
}

inline bool is_cograph(const Graph& g) {
  try {
    build_cotree(g);
    return true;
  } catch (const RecognitionError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Simple classes

// 2-coloring (0/1 per vertex), or nullopt if an odd cycle exists.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < static_cast<Vertex>(g.n()); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (Vertex w : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

// A triangle as three sorted vertices, or empty if none.
inline std::vector<Vertex> find_triangle(const Graph& g) {
  for (Vertex u = 0; u < static_cast<Vertex>(g.n()); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto i = std::upper_bound(nu.begin(), nu.end(), v);
      auto j = std::upper_bound(nv.begin(), nv.end(), v);
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return {u, v, *i};
      }
    }
  }
  return {};
}

inline bool is_triangle_free(const Graph& g) { return find_triangle(g).empty(); }

// Acyclic (a forest; connectivity not required).
inline bool is_forest(const Graph& g) {
  return g.m() + connected_components(g).size() == g.n();
}

// ---------------------------------------------------------------------------
// Tag set

enum class GraphClass : std::uint8_t {
  split,
  chordal,
  proper_interval,
  cograph,
  tree,  // acyclic, i.e. a forest
  bipartite,
  triangle_free,
};

inline constexpr std::array<GraphClass, 7> kAllClasses = {
    GraphClass::split,   GraphClass::chordal,   GraphClass::proper_interval,
    GraphClass::cograph, GraphClass::tree,      GraphClass::bipartite,
    GraphClass::triangle_free};

inline std::string_view name(GraphClass c) {
  switch (c) {
    case GraphClass::split: return "split";
    case GraphClass::chordal: return "chordal";
    case GraphClass::proper_interval: return "proper_interval";
    case GraphClass::cograph: return "cograph";
    case GraphClass::tree: return "tree";
    case GraphClass::bipartite: return "bipartite";
    case GraphClass::triangle_free: return "triangle_free";
  }
  return "?";
}

inline std::optional<GraphClass> parse_graph_class(std::string_view s) {
  for (GraphClass c : kAllClasses) {
    if (name(c) == s) return c;
  }
  if (s == "forest") return GraphClass::tree;
  return std::nullopt;
}

// Class membership as a small bitset over GraphClass.
class ClassSet {
 public:
  void insert(GraphClass c) { bits_ |= bit(c); }
  bool contains(GraphClass c) const { return (bits_ & bit(c)) != 0; }
  friend bool operator==(const ClassSet&, const ClassSet&) = default;

  std::vector<GraphClass> to_vector() const {
    std::vector<GraphClass> out;
    for (GraphClass c : kAllClasses)
      if (contains(c)) out.push_back(c);
    return out;
  }

  static ClassSet of(std::initializer_list<GraphClass> cs) {
    ClassSet s;
    for (GraphClass c : cs) s.insert(c);
    return s;
  }

 private:
  static std::uint32_t bit(GraphClass c) { return 1u << static_cast<unsigned>(c); }
  std::uint32_t bits_ = 0;
};

inline bool belongs_to(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::split: return is_split(g);
    case GraphClass::chordal: return is_chordal(g);
    case GraphClass::proper_interval: return is_proper_interval(g);
    case GraphClass::cograph: return is_cograph(g);
    case GraphClass::tree: return is_forest(g);
    case GraphClass::bipartite: return bipartition(g).has_value();
    case GraphClass::triangle_free: return is_triangle_free(g);
  }
  return false;
}

// Each tag is reported only if its certificate constructor succeeds.
inline ClassSet recognize(const Graph& g) {
  ClassSet s;
  for (GraphClass c : kAllClasses)
    if (belongs_to(g, c)) s.insert(c);
  return s;
}

}  // namespace uct
