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
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "uct/cograph.hpp"
#include "uct/oracle.hpp"
#include "uct/proper_interval.hpp"
#include "uct/recognize.hpp"
#include "uct/result.hpp"
#include "uct/split.hpp"
#include "uct/triangle_free.hpp"

namespace uct {

struct DispatchOptions {
  std::optional<Method> forced;  // skip detection; the class must still be recognized
  OracleLimits limits;
  bool verify = true;  // re-check the witness against an explicit clique list
};

// True if `clique` is a maximal clique of g.
inline bool is_maximal_clique(const Graph& g, std::span<const Vertex> clique) {
  if (clique.empty() || !is_clique(g, clique)) return false;
  Vertex pivot = clique[0];
  for (Vertex v : clique) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.n()) return false;
    if (g.degree(v) < g.degree(pivot)) pivot = v;
  }
  // Any extension is a neighbor of every member, in particular of the pivot.
  for (Vertex w : g.neighbors(pivot)) {
    if (std::binary_search(clique.begin(), clique.end(), w)) continue;
    bool all = true;
    for (Vertex v : clique) {
      if (v != pivot && !g.adjacent(v, w)) {
        all = false;
        break;
      }
    }
    if (all) return false;
  }
  return true;
}

// Checks the certificates carried by a witness without enumerating cliques:
// each is a sorted maximal clique meeting the set in exactly its vertex.
inline bool certificates_valid(const Graph& g, const TransversalWitness& w) {
  if (w.certificates.size() != w.vertices.size()) return false;
  if (!std::is_sorted(w.vertices.begin(), w.vertices.end()) ||
      std::adjacent_find(w.vertices.begin(), w.vertices.end()) != w.vertices.end()) {
    return false;
  }
  std::vector<char> in_s(g.n(), 0);
  for (Vertex v : w.vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.n()) return false;
    in_s[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const auto& c = w.certificates[i];
    if (c.vertex != w.vertices[i]) return false;
    if (!std::is_sorted(c.clique.begin(), c.clique.end())) return false;
    std::size_t hits = 0;
    for (Vertex v : c.clique) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.n()) return false;
      hits += in_s[static_cast<std::size_t>(v)];
    }
    if (hits != 1 || !std::binary_search(c.clique.begin(), c.clique.end(), c.vertex)) return false;
    if (!is_maximal_clique(g, c.clique)) return false;
  }
  return true;
}

namespace detail {

// A cycle of g as a vertex sequence, or empty for forests.
inline std::vector<Vertex> find_cycle(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Vertex> parent(n, -1), depth(n, -1);
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (depth[static_cast<std::size_t>(s)] >= 0) continue;
    depth[static_cast<std::size_t>(s)] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (Vertex w : g.neighbors(v)) {
        const auto wi = static_cast<std::size_t>(w);
        if (depth[wi] < 0) {
          depth[wi] = depth[static_cast<std::size_t>(v)] + 1;
          parent[wi] = v;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(v)] && v < w) {
          // Non-tree edge: walk both ends up to their common ancestor.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
              a = parent[static_cast<std::size_t>(a)];
              left.push_back(a);
            } else {
              b = parent[static_cast<std::size_t>(b)];
              right.push_back(b);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
      }
    }
  }
  return {};
}

inline UctResult solve_as(const Graph& g, Method m, const OracleLimits& limits) {
  switch (m) {
    case Method::cograph: return uct_cograph(g, build_cotree(g));
    case Method::split: return uct_split(g, split_partition(g));
    case Method::proper_interval: return uct_proper_interval(g, proper_interval_order(g));
    case Method::tree: {
      if (auto cycle = find_cycle(g); !cycle.empty()) {
        throw RecognitionError("not a forest: cycle " + join_ids(cycle), cycle);
      }
      return uct_triangle_free(g, limits);
    }
    case Method::oracle: {
      auto o = uct_oracle(g, limits);
      UctResult r;
      r.value = o.value;
      r.witness = std::move(o.witness);
      r.method = Method::oracle;
      return r;
    }
  }
  throw std::logic_error("solve_as: unknown method");
}

inline Method detect_method(const Graph& g) {
  if (is_cograph(g)) return Method::cograph;
  if (is_split(g)) return Method::split;
  if (is_proper_interval(g)) return Method::proper_interval;
  if (is_forest(g)) return Method::tree;
  return Method::oracle;
}

}  // namespace detail

// Computes the upper clique transversal number with a witness.
//
// Isolated vertices are peeled first: each is its own maximal clique and sits
// in every minimal transversal. The rest goes to the first class that
// matches in the order cograph, split, proper interval, forest, and to the
// subset-search oracle otherwise. A forced method skips detection but its
// certificate (cotree, partition, order, acyclicity) is still built, so a
// wrong class raises RecognitionError.
//
// With opts.verify the witness is checked against the enumerated maximal
// cliques; a clique cap hit leaves `verified` false, a failed check throws
// std::logic_error. Without it only the carried certificates are checked.
inline UctResult uct_dispatch(const Graph& g, const DispatchOptions& opts = {}) {
  std::vector<Vertex> isolated, rest;
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    (g.degree(v) == 0 ? isolated : rest).push_back(v);
  }
  UctResult r;
  if (rest.empty()) {
    r.method = opts.forced.value_or(Method::cograph);
  } else {
    const Graph core = isolated.empty() ? g : induced_subgraph(g, rest);
    const Method m = opts.forced ? *opts.forced : detail::detect_method(core);
    UctResult sub = detail::solve_as(core, m, opts.limits);
    r.method = sub.method;
    if (isolated.empty()) {
      r.witness = std::move(sub.witness);
    } else {
      for (auto& c : sub.witness.certificates) {
        c.vertex = rest[static_cast<std::size_t>(c.vertex)];
        for (Vertex& v : c.clique) v = rest[static_cast<std::size_t>(v)];
        std::sort(c.clique.begin(), c.clique.end());
        r.witness.certificates.push_back(std::move(c));
      }
    }
  }
  for (Vertex v : isolated) r.witness.certificates.push_back({v, {v}});
  std::sort(r.witness.certificates.begin(), r.witness.certificates.end(),
            [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  r.witness.vertices.clear();
  for (const auto& c : r.witness.certificates) r.witness.vertices.push_back(c.vertex);
  r.value = r.witness.vertices.size();

  if (!certificates_valid(g, r.witness)) {
    throw std::logic_error("uct_dispatch: solver returned invalid certificates");
  }
  if (opts.verify) {
    try {
      const auto check = verify_minimal_ct(g, r.witness.vertices, opts.limits);
      if (!accepted(check)) throw std::logic_error("uct_dispatch: witness failed verification");
      r.verified = true;
    } catch (const CapExceeded&) {
      r.verified = false;
    }
  }
  return r;
}

}  // namespace uct
