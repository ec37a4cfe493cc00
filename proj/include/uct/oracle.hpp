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

// Exhaustive ground truth. Every routine here enumerates vertex or edge
// subsets directly and is only meant for small graphs; caps turn oversized
// inputs into CapExceeded instead of long runs.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "uct/cliques.hpp"
#include "uct/graph.hpp"
#include "uct/incidence.hpp"

namespace uct {

struct OracleLimits {
  std::size_t max_n = 20;                       // uct_oracle, min_ids_oracle
  std::size_t max_cliques = kDefaultMaxCliques;  // clique enumeration
  std::size_t max_matching_edges = 64;          // induced_matching_oracle
  std::size_t max_star_forest_n = 16;           // star_forest_oracle
};

// A minimal clique transversal with one private clique per member:
// certificates[i].clique meets `vertices` exactly in certificates[i].vertex.
struct TransversalWitness {
  struct Certificate {
    Vertex vertex;
    std::vector<Vertex> clique;
    friend bool operator==(const Certificate&, const Certificate&) = default;
  };
  std::vector<Vertex> vertices;             // sorted
  std::vector<Certificate> certificates;    // same order as vertices

  friend bool operator==(const TransversalWitness&, const TransversalWitness&) = default;
};

// Why a set fails to be a minimal clique transversal.
struct Refutation {
  enum class Kind { missed_clique, no_private_clique, invalid_set };
  Kind kind;
  std::vector<Vertex> clique;  // missed_clique: a maximal clique disjoint from the set
  Vertex vertex = -1;          // no_private_clique: the redundant member
  std::string detail;
};

using Verification = std::variant<TransversalWitness, Refutation>;

inline bool accepted(const Verification& v) { return std::holds_alternative<TransversalWitness>(v); }

namespace detail {

inline void require_n(const Graph& g, std::size_t cap, const char* what) {
  if (g.n() > cap || g.n() > 62) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(g.n()) + " exceeds cap of " +
                      std::to_string(std::min<std::size_t>(cap, 62)));
  }
}

using Mask = std::uint64_t;

inline Mask to_mask(std::span<const Vertex> set) {
  Mask m = 0;
  for (Vertex v : set) m |= Mask{1} << v;
  return m;
}

inline std::vector<Vertex> from_mask(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// a precedes b as sorted sequences of equal length.
inline bool lex_less(Mask a, Mask b) {
  const Mask d = a ^ b;
  return d != 0 && (a & d & (~d + 1)) != 0;
}

inline std::vector<Mask> closed_neighborhoods(const Graph& g) {
  std::vector<Mask> nb(g.n());
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    nb[static_cast<std::size_t>(v)] = to_mask(g.neighbors(v)) | (Mask{1} << v);
  }
  return nb;
}

// Calls f(mask) for every k-subset of n bits in increasing numeric order.
template <typename F>
void for_each_subset_of_size(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask s = (k == 64 ? ~Mask{0} : (Mask{1} << k) - 1);
  const Mask limit = Mask{1} << n;
  while (s < limit) {
    if (!f(s)) return;
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

inline bool is_minimal_ct(Mask s, std::span<const Mask> cliques) {
  Mask has_private = 0;
  for (Mask c : cliques) {
    const Mask hit = c & s;
    if (hit == 0) return false;
    if ((hit & (hit - 1)) == 0) has_private |= hit;
  }
  return has_private == s;
}

}  // namespace detail

// Checks S against an explicit clique list. Certificates use the first clique
// in list order that meets S in exactly that vertex.
inline Verification verify_minimal_ct(const CliqueList& cliques, std::span<const Vertex> s) {
  std::vector<Vertex> set(s.begin(), s.end());
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
    return Refutation{Refutation::Kind::invalid_set, {}, -1, "duplicate vertex"};
  }
  for (Vertex v : set) {
    if (v < 0 || static_cast<std::size_t>(v) >= cliques.n) {
      return Refutation{Refutation::Kind::invalid_set, {}, v, "vertex out of range"};
    }
  }
  std::vector<char> in_s(cliques.n, 0);
  for (Vertex v : set) in_s[static_cast<std::size_t>(v)] = 1;
  std::vector<int> cert(cliques.n, -1);
  for (std::size_t i = 0; i < cliques.cliques.size(); ++i) {
    const auto& c = cliques.cliques[i];
    Vertex only = -1;
    std::size_t hits = 0;
    for (Vertex v : c) {
      if (in_s[static_cast<std::size_t>(v)]) {
        ++hits;
        only = v;
      }
    }
    if (hits == 0) return Refutation{Refutation::Kind::missed_clique, c, -1, {}};
    if (hits == 1 && cert[static_cast<std::size_t>(only)] < 0) {
      cert[static_cast<std::size_t>(only)] = static_cast<int>(i);
    }
  }
  TransversalWitness w;
  w.vertices = set;
  for (Vertex v : set) {
    const int i = cert[static_cast<std::size_t>(v)];
    if (i < 0) return Refutation{Refutation::Kind::no_private_clique, {}, v, {}};
    w.certificates.push_back({v, cliques.cliques[static_cast<std::size_t>(i)]});
  }
  return w;
}

inline Verification verify_minimal_ct(const Graph& g, std::span<const Vertex> s,
                                      const OracleLimits& limits = {}) {
  return verify_minimal_ct(maximal_cliques(g, limits.max_cliques), s);
}

struct OracleResult {
  std::size_t value = 0;
  TransversalWitness witness;
};

// Maximum minimal clique transversal by subset search in decreasing size. The
// first size with a hit is optimal; within it the lexicographically smallest
// set is returned. The start size is min(n, #cliques): distinct members need
// distinct private cliques.
inline OracleResult uct_oracle(const Graph& g, const OracleLimits& limits = {}) {
  detail::require_n(g, limits.max_n, "uct_oracle");
  OracleResult out;
  if (g.n() == 0) return out;
  const CliqueList list = maximal_cliques(g, limits.max_cliques);
  std::vector<detail::Mask> cliques;
  for (const auto& c : list.cliques) cliques.push_back(detail::to_mask(c));
  for (std::size_t k = std::min(g.n(), cliques.size()); k >= 1; --k) {
    detail::Mask best = 0;
    bool found = false;
    detail::for_each_subset_of_size(g.n(), k, [&](detail::Mask s) {
      if (detail::is_minimal_ct(s, cliques) && (!found || detail::lex_less(s, best))) {
        best = s;
        found = true;
      }
      return true;
    });
    if (found) {
      const auto set = detail::from_mask(best);
      out.value = k;
      out.witness = std::get<TransversalWitness>(verify_minimal_ct(list, set));
      return out;
    }
  }
  throw std::logic_error("uct_oracle: no minimal clique transversal found");
}

// Exact upper clique transversal number by branch and bound over vertices,
// for graphs up to 64 vertices with few maximal cliques. Vertices are decided
// in the order their smallest cliques list them. A branch dies when a clique
// is left with no member or a chosen vertex loses its last candidate private
// clique; it is cut when the chosen set plus the undecided vertices that still
// lie in an unhit clique cannot beat the incumbent. The witness is the first
// optimum found, preferring inclusion.
inline OracleResult uct_branch_and_bound(const Graph& g, const OracleLimits& limits = {}) {
  if (g.n() > 64) {
    throw CapExceeded("uct_branch_and_bound: n = " + std::to_string(g.n()) + " exceeds cap of 64");
  }
  OracleResult out;
  if (g.n() == 0) return out;
  const CliqueList list = maximal_cliques(g, limits.max_cliques);
  std::vector<detail::Mask> cliques;
  for (const auto& c : list.cliques) cliques.push_back(detail::to_mask(c));
  std::vector<std::vector<detail::Mask>> through(g.n());
  for (detail::Mask c : cliques) {
    for (detail::Mask r = c; r; r &= r - 1) through[static_cast<std::size_t>(std::countr_zero(r))].push_back(c);
  }
  std::vector<std::size_t> by_size(cliques.size());
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(cliques[a]) < std::popcount(cliques[b]);
  });
  std::vector<Vertex> order;
  detail::Mask placed = 0;
  for (std::size_t i : by_size) {
    for (detail::Mask r = cliques[i] & ~placed; r; r &= r - 1) order.push_back(static_cast<Vertex>(std::countr_zero(r)));
    placed |= cliques[i];
  }

  auto has_private = [&](Vertex v, detail::Mask s) {
    const detail::Mask bit = detail::Mask{1} << v;
    for (detail::Mask c : through[static_cast<std::size_t>(v)]) {
      if ((c & s) == bit) return true;
    }
    return false;
  };
  detail::Mask best = 0;
  std::size_t best_size = 0;
  auto search = [&](auto&& self, std::size_t i, detail::Mask s, detail::Mask out_set) -> void {
    const std::size_t size = static_cast<std::size_t>(std::popcount(s));
    if (i == order.size()) {
      if (size > best_size) {
        best = s;
        best_size = size;
      }
      return;
    }
    const detail::Mask decided = s | out_set;
    detail::Mask open = 0;
    for (detail::Mask c : cliques) {
      if ((c & s) == 0) open |= c;
    }
    if (size + static_cast<std::size_t>(std::popcount(open & ~decided)) <= best_size) return;

    const Vertex v = order[i];
    const detail::Mask bit = detail::Mask{1} << v;
    const detail::Mask with = s | bit;
    bool ok = has_private(v, with);
    for (detail::Mask r = s; ok && r; r &= r - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(r));
      if (g.adjacent(v, w)) ok = has_private(w, with);
    }
    if (ok) self(self, i + 1, with, out_set);

    const detail::Mask without = out_set | bit;
    for (detail::Mask c : through[static_cast<std::size_t>(v)]) {
      if ((c & ~without) == 0) return;
    }
    self(self, i + 1, s, without);
  };
  search(search, 0, 0, 0);
  const auto set = detail::from_mask(best);
  out.value = best_size;
  out.witness = std::get<TransversalWitness>(verify_minimal_ct(list, set));
  return out;
}

// Maximum induced matching of a graph, by branch and bound over edges: a
// maximum independent set in the conflict graph where two edges conflict if
// they share an endpoint or an edge joins their endpoints. Edge sets are
// multiword bitsets, so the cap is a plain configuration value.
inline std::size_t induced_matching_oracle(const Graph& g, const OracleLimits& limits = {}) {
  if (g.m() > limits.max_matching_edges) {
    throw CapExceeded("induced_matching_oracle: " + std::to_string(g.m()) +
                      " edges exceed cap of " + std::to_string(limits.max_matching_edges));
  }
  using Bits = std::vector<detail::Mask>;
  const auto edges = g.edges();
  const std::size_t k = edges.size();
  const std::size_t words = (k + 63) / 64;
  std::vector<Bits> conflict(k, Bits(words, 0));
  auto set_bit = [](Bits& b, std::size_t i) { b[i / 64] |= detail::Mask{1} << (i % 64); };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      const bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v ||
                         g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) || g.adjacent(a.v, b.u) ||
                         g.adjacent(a.v, b.v);
      if (touch) {
        set_bit(conflict[i], j);
        set_bit(conflict[j], i);
      }
    }
  }
  auto count = [](const Bits& b) {
    std::size_t c = 0;
    for (detail::Mask w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  };
  std::size_t best = 0;
  auto search = [&](auto&& self, Bits candidates, std::size_t size) -> void {
    const std::size_t left = count(candidates);
    if (left == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + left <= best) return;
    std::size_t w = 0;
    while (candidates[w] == 0) ++w;
    const std::size_t e = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
    candidates[w] &= candidates[w] - 1;
    bool conflicts = false;
    Bits taken = candidates;
    for (std::size_t i = 0; i < words; ++i) {
      conflicts = conflicts || (candidates[i] & conflict[e][i]) != 0;
      taken[i] &= ~conflict[e][i];
    }
    self(self, std::move(taken), size + 1);
    // Skipping e only helps if some remaining edge conflicts with it.
    if (conflicts) self(self, std::move(candidates), size);
  };
  Bits all(words, ~detail::Mask{0});
  if (k % 64 != 0) all[words - 1] = (detail::Mask{1} << (k % 64)) - 1;
  search(search, std::move(all), 0);
  return best;
}

inline std::size_t induced_matching_oracle(const IncidenceGraph& b, const OracleLimits& limits = {}) {
  return induced_matching_oracle(b.as_graph(), limits);
}

// Minimum dominating set size by increasing subset size.
inline std::size_t domination_number_oracle(const Graph& g, std::size_t max_n) {
  detail::require_n(g, max_n, "domination_number_oracle");
  const auto nb = detail::closed_neighborhoods(g);
  const detail::Mask all = g.n() == 0 ? 0 : (detail::Mask{1} << g.n()) - 1;
  for (std::size_t k = 0; k <= g.n(); ++k) {
    bool found = false;
    detail::for_each_subset_of_size(g.n(), k, [&](detail::Mask s) {
      detail::Mask covered = 0;
      for (detail::Mask r = s; r; r &= r - 1) covered |= nb[static_cast<std::size_t>(std::countr_zero(r))];
      if (covered == all) found = true;
      return !found;
    });
    if (found) return k;
  }
  return g.n();
}

// Maximum edge count of a spanning star forest, n - domination number: the
// centers of a star forest dominate, and a dominating set D yields a star
// forest with |D| stars by attaching every other vertex to a neighbor in D.
inline std::size_t star_forest_oracle(const Graph& g, const OracleLimits& limits = {}) {
  return g.n() - domination_number_oracle(g, limits.max_star_forest_n);
}

// Independent domination number i(G): smallest maximal independent set.
inline std::size_t min_ids_oracle(const Graph& g, const OracleLimits& limits = {}) {
  detail::require_n(g, limits.max_n, "min_ids_oracle");
  const auto nb = detail::closed_neighborhoods(g);
  const detail::Mask all = g.n() == 0 ? 0 : (detail::Mask{1} << g.n()) - 1;
  for (std::size_t k = 0; k <= g.n(); ++k) {
    bool found = false;
    detail::for_each_subset_of_size(g.n(), k, [&](detail::Mask s) {
      detail::Mask covered = 0;
      for (detail::Mask r = s; r; r &= r - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(r));
        if (nb[v] & s & ~(detail::Mask{1} << v)) return true;  // not independent
        covered |= nb[v];
      }
      if (covered == all) found = true;
      return !found;
    });
    if (found) return k;
  }
  return g.n();
}

// Independence number alpha(G).
inline std::size_t independence_number_oracle(const Graph& g, const OracleLimits& limits = {}) {
  detail::require_n(g, limits.max_n, "independence_number_oracle");
  const auto nb = detail::closed_neighborhoods(g);
  std::size_t best = 0;
  auto search = [&](auto&& self, detail::Mask candidates, std::size_t size) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    const detail::Mask rest = candidates & (candidates - 1);
    self(self, rest & ~nb[v], size + 1);
    self(self, rest, size);
  };
  search(search, g.n() == 0 ? 0 : (detail::Mask{1} << g.n()) - 1, 0);
  return best;
}

}  // namespace uct
