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
#include <limits>
#include <vector>

#include "uct/oracle.hpp"
#include "uct/recognize.hpp"
#include "uct/result.hpp"

namespace uct {

// Minimum maximal independent set of a forest (independent domination), by a
// three-state DP per rooted tree:
//   in        v in the set; children are out (dominated by v or not)
//   out_dom   v out, some child in; children in or out_dom
//   out_free  v out, no child in; children out_dom, v relies on its parent
// Returned sorted. O(n).
inline std::vector<Vertex> min_maximal_independent_set_forest(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("min_maximal_independent_set_forest: not a forest");
  const std::size_t n = g.n();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::size_t> in(n), out_dom(n), out_free(n);
  std::vector<Vertex> parent(n, -1), bfs;
  bfs.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> roots;
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    roots.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    const std::size_t start = bfs.size();
    bfs.push_back(s);
    for (std::size_t h = start; h < bfs.size(); ++h) {
      for (Vertex w : g.neighbors(bfs[h])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent[static_cast<std::size_t>(w)] = bfs[h];
          bfs.push_back(w);
        }
      }
    }
  }
  auto children = [&](Vertex v, auto&& f) {
    for (Vertex w : g.neighbors(v))
      if (parent[static_cast<std::size_t>(w)] == v) f(static_cast<std::size_t>(w));
  };
  std::vector<std::size_t> forced_child(n, 0);  // out_dom: child forced into the set
  for (std::size_t k = n; k-- > 0;) {
    const Vertex v = bfs[k];
    const auto i = static_cast<std::size_t>(v);
    std::size_t in_v = 1, free_v = 0, dom_base = 0, best_delta = kInf;
    bool leaf = true;
    children(v, [&](std::size_t c) {
      leaf = false;
      in_v += std::min(out_dom[c], out_free[c]);
      free_v = std::min(kInf, free_v + out_dom[c]);
      const std::size_t best_c = std::min(in[c], out_dom[c]);
      dom_base += best_c;
      if (in[c] - best_c < best_delta) {
        best_delta = in[c] - best_c;
        forced_child[i] = c;
      }
    });
    in[i] = in_v;
    out_free[i] = free_v;
    out_dom[i] = leaf ? kInf : std::min(kInf, dom_base + best_delta);
  }

  // Top-down reconstruction. state: 0 = in, 1 = out_dom, 2 = out_free.
  std::vector<Vertex> chosen;
  std::vector<std::pair<Vertex, int>> stack;
  for (Vertex r : roots) {
    const auto i = static_cast<std::size_t>(r);
    stack.push_back({r, in[i] <= out_dom[i] ? 0 : 1});
  }
  while (!stack.empty()) {
    const auto [v, state] = stack.back();
    stack.pop_back();
    const auto i = static_cast<std::size_t>(v);
    if (state == 0) chosen.push_back(v);
    children(v, [&](std::size_t c) {
      int cs;
      if (state == 0) cs = out_dom[c] <= out_free[c] ? 1 : 2;
      else if (state == 2) cs = 1;
      else if (c == forced_child[i]) cs = 0;
      else cs = out_dom[c] <= in[c] ? 1 : 0;
      stack.push_back({static_cast<Vertex>(c), cs});
    });
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Triangle-free graphs: the maximal cliques are the edges and the isolated
// vertices, so minimal clique transversals are the complements of maximal
// independent sets (plus every isolated vertex). On forests the value is
// n - i(G) via the DP above; other triangle-free graphs go to the oracle and
// the result is tagged accordingly.
inline UctResult uct_triangle_free(const Graph& g, const OracleLimits& limits = {}) {
  if (auto tri = find_triangle(g); !tri.empty()) {
    throw RecognitionError("not triangle-free: triangle " + join_ids(tri), tri);
  }
  if (!is_forest(g)) {
    UctResult r;
    auto o = uct_oracle(g, limits);
    r.value = o.value;
    r.witness = std::move(o.witness);
    r.method = Method::oracle;
    r.verified = true;
    return r;
  }
  const auto mis = min_maximal_independent_set_forest(g);
  std::vector<char> in_mis(g.n(), 0);
  for (Vertex v : mis) in_mis[static_cast<std::size_t>(v)] = 1;
  UctResult r;
  r.method = Method::tree;
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    if (g.degree(v) == 0) {
      r.witness.vertices.push_back(v);
      r.witness.certificates.push_back({v, {v}});
    } else if (!in_mis[static_cast<std::size_t>(v)]) {
      // Dominated by the maximal independent set: pair with its first MIS neighbor.
      Vertex w = -1;
      for (Vertex u : g.neighbors(v)) {
        if (in_mis[static_cast<std::size_t>(u)]) {
          w = u;
          break;
        }
      }
      r.witness.vertices.push_back(v);
      r.witness.certificates.push_back({v, {std::min(v, w), std::max(v, w)}});
    }
  }
  r.value = r.witness.vertices.size();
  return r;
}

}  // namespace uct
