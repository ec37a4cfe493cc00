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
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "uct/graph.hpp"
#include "uct/lexbfs.hpp"

namespace uct {

inline constexpr std::size_t kDefaultMaxCliques = 1'000'000;

// The maximal cliques of one graph. Each clique is strictly increasing and
// the list is sorted lexicographically.
struct CliqueList {
  std::vector<std::vector<Vertex>> cliques;
  std::size_t n = 0;  // fingerprint of the source graph
  std::size_t m = 0;

  std::size_t size() const noexcept { return cliques.size(); }
  bool matches(const Graph& g) const noexcept { return g.n() == n && g.m() == m; }
};

namespace detail {

// Bron-Kerbosch with Tomita pivoting. P and X are sorted candidate/excluded
// sets; R is the clique under construction.
class PivotEnumerator {
 public:
  PivotEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<std::vector<Vertex>> run() {
    std::vector<Vertex> p(g_.n());
    for (std::size_t v = 0; v < g_.n(); ++v) p[v] = static_cast<Vertex>(v);
    std::vector<Vertex> r, x;
    expand(r, p, x);
    return std::move(out_);
  }

 private:
  static std::vector<Vertex> intersect(const std::vector<Vertex>& a, std::span<const Vertex> b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  std::size_t count_in(std::span<const Vertex> nb, const std::vector<Vertex>& p) const {
    std::size_t k = 0;
    auto i = nb.begin();
    auto j = p.begin();
    while (i != nb.end() && j != p.end()) {
      if (*i < *j) ++i;
      else if (*j < *i) ++j;
      else { ++k; ++i; ++j; }
    }
    return k;
  }

  void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty()) {
        if (out_.size() == cap_) {
          throw CapExceeded("maximal clique enumeration exceeded cap of " + std::to_string(cap_));
        }
        auto c = r;
        std::sort(c.begin(), c.end());
        out_.push_back(std::move(c));
      }
      return;
    }
    // Pivot: vertex of P u X with the most neighbors in P.
    Vertex pivot = p.front();
    std::size_t best = 0;
    bool first = true;
    for (const auto* set : {&p, &x}) {
      for (Vertex u : *set) {
        const std::size_t k = count_in(g_.neighbors(u), p);
        if (first || k > best) {
          best = k;
          pivot = u;
          first = false;
        }
      }
    }
    auto pivot_nb = g_.neighbors(pivot);
    std::vector<Vertex> branch;
    std::set_difference(p.begin(), p.end(), pivot_nb.begin(), pivot_nb.end(),
                        std::back_inserter(branch));
    for (Vertex v : branch) {
      auto nb = g_.neighbors(v);
      r.push_back(v);
      expand(r, intersect(p, nb), intersect(x, nb));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<std::vector<Vertex>> out_;
};

}  // namespace detail

// Exact list of maximal cliques. Chordal inputs (detected by Lex-BFS and a
// PEO check) take the linear elimination sweep and yield at most n cliques;
// everything else goes through pivoted enumeration, bounded by `cap`.
inline CliqueList maximal_cliques(const Graph& g, std::size_t cap = kDefaultMaxCliques) {
  CliqueList out;
  out.n = g.n();
  out.m = g.m();
  if (auto order = chordal_visit_order(g)) {
    out.cliques = chordal_maximal_cliques(g, *order);
    if (out.cliques.size() > cap) {
      throw CapExceeded("maximal clique count " + std::to_string(out.cliques.size()) +
                        " exceeds cap of " + std::to_string(cap));
    }
  } else {
    out.cliques = detail::PivotEnumerator(g, cap).run();
  }
  std::sort(out.cliques.begin(), out.cliques.end());
  return out;
}

// One clique per line, ids space-separated.
inline std::string to_string(const CliqueList& list) {
  std::string out;
  for (const auto& c : list.cliques) {
    out += join_ids(c);
    out += '\n';
  }
  return out;
}

// Extends `seed` (a clique) greedily by increasing vertex id to a maximal
// clique. Candidates are the common neighbors of the seed.
inline std::vector<Vertex> extend_to_maximal_clique(const Graph& g, std::vector<Vertex> seed) {
  std::sort(seed.begin(), seed.end());
  if (seed.empty()) {
    if (g.n() == 0) return seed;
    seed.push_back(0);
  }
  auto first = g.neighbors(seed.front());
  std::vector<Vertex> candidates(first.begin(), first.end());
  for (std::size_t i = 1; i < seed.size(); ++i) {
    auto nb = g.neighbors(seed[i]);
    std::vector<Vertex> kept;
    std::set_intersection(candidates.begin(), candidates.end(), nb.begin(), nb.end(),
                          std::back_inserter(kept));
    candidates = std::move(kept);
  }
  std::vector<Vertex> clique = seed;
  while (!candidates.empty()) {
    const Vertex v = candidates.front();
    clique.push_back(v);
    auto nb = g.neighbors(v);
    std::vector<Vertex> kept;
    std::set_intersection(candidates.begin() + 1, candidates.end(), nb.begin(), nb.end(),
                          std::back_inserter(kept));
    candidates = std::move(kept);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace uct
