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
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uct/cliques.hpp"
#include "uct/errors.hpp"
#include "uct/graph.hpp"
#include "uct/incidence.hpp"
#include "uct/oracle.hpp"
#include "uct/recognize.hpp"

namespace uct {

// A generated graph together with the identity it should satisfy.
struct GadgetInstance {
  enum class Provenance { chordal_ssf, two_star, line_graph, subdivision };
  Graph graph;
  Provenance provenance = Provenance::chordal_ssf;
  std::size_t q = 0;            // two_star only
  std::optional<Graph> source;  // chordal_ssf, line_graph, subdivision
  std::string relation;         // human-readable form of the identity
};

inline std::string_view name(GadgetInstance::Provenance p) {
  switch (p) {
    case GadgetInstance::Provenance::chordal_ssf: return "chordal_ssf";
    case GadgetInstance::Provenance::two_star: return "two_star";
    case GadgetInstance::Provenance::line_graph: return "line_graph";
    case GadgetInstance::Provenance::subdivision: return "subdivision";
  }
  return "?";
}

// Accepts underscores or hyphens ("two-star"), plus "chordal" as a short form.
inline std::optional<GadgetInstance::Provenance> parse_provenance(std::string_view s) {
  std::string t(s);
  std::replace(t.begin(), t.end(), '-', '_');
  if (t == "chordal_ssf" || t == "chordal") return GadgetInstance::Provenance::chordal_ssf;
  if (t == "two_star") return GadgetInstance::Provenance::two_star;
  if (t == "line_graph" || t == "line") return GadgetInstance::Provenance::line_graph;
  if (t == "subdivision") return GadgetInstance::Provenance::subdivision;
  return std::nullopt;
}

// K_n on the source vertices; per edge e = {u, v} (in edges() order) a vertex
// x_e adjacent to u, v and a pendant y_e. Ids: V, then all x_e, then all y_e.
inline GadgetInstance gen_chordal_gadget(const Graph& g) {
  if (g.m() == 0) throw std::invalid_argument("gen_chordal_gadget: source has no edges");
  const auto n = static_cast<Vertex>(g.n());
  const auto m = static_cast<Vertex>(g.m());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  const auto src = g.edges();
  for (Vertex k = 0; k < m; ++k) {
    const Vertex x = n + k, y = n + m + k;
    edges.push_back({src[static_cast<std::size_t>(k)].u, x});
    edges.push_back({src[static_cast<std::size_t>(k)].v, x});
    edges.push_back({x, y});
  }
  GadgetInstance inst{Graph(g.n() + 2 * g.m(), edges), GadgetInstance::Provenance::chordal_ssf, 0, g,
                      "tau+(G') = l*(G) + m(G) when l*(G) >= 2"};
  return inst;
}

// Two copies of K_{1,q} with their centers joined. Vertices 0 and q + 1 are
// the centers; 1..q and q + 2..2q + 1 the leaves.
inline GadgetInstance gen_two_star(std::size_t q) {
  if (q < 2) throw std::invalid_argument("gen_two_star: q must be at least 2");
  const auto c1 = Vertex{0};
  const auto c2 = static_cast<Vertex>(q + 1);
  std::vector<Edge> edges{{c1, c2}};
  for (Vertex i = 1; i <= static_cast<Vertex>(q); ++i) {
    edges.push_back({c1, i});
    edges.push_back({c2, c2 + i});
  }
  GadgetInstance inst{Graph(2 * q + 2, edges), GadgetInstance::Provenance::two_star, q, std::nullopt,
                      "tau+(G) <= q + 1 and im(B_G) >= 2q"};
  return inst;
}

// Line graph of a triangle-free source with minimum degree 2. Vertex k of the
// result is edge k of g.edges().
inline GadgetInstance gen_line_graph(const Graph& g) {
  if (auto tri = find_triangle(g); !tri.empty()) {
    throw RecognitionError("gen_line_graph: source has a triangle " + join_ids(tri), tri);
  }
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    if (g.degree(v) < 2) {
      throw RecognitionError("gen_line_graph: vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(g.degree(v)),
                             {v});
    }
  }
  const auto src = g.edges();
  // Edges sharing an endpoint: group edge ids by endpoint.
  std::vector<std::vector<Vertex>> at(g.n());
  for (std::size_t k = 0; k < src.size(); ++k) {
    at[static_cast<std::size_t>(src[k].u)].push_back(static_cast<Vertex>(k));
    at[static_cast<std::size_t>(src[k].v)].push_back(static_cast<Vertex>(k));
  }
  std::vector<Edge> edges;
  for (const auto& group : at) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) edges.push_back({group[i], group[j]});
    }
  }
  GadgetInstance inst{Graph(src.size(), edges), GadgetInstance::Provenance::line_graph, 0, g,
                      "tau+(L(G)) = l*(G)"};
  return inst;
}

// Subdivision of a triangle-free source without isolated vertices: vertex n + k
// sits on edge k of g.edges(). For such sources it equals B_G with cliques in
// sorted order.
inline GadgetInstance gen_subdivision(const Graph& g) {
  if (auto tri = find_triangle(g); !tri.empty()) {
    throw RecognitionError("gen_subdivision: source has a triangle " + join_ids(tri), tri);
  }
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    if (g.degree(v) == 0) {
      throw RecognitionError("gen_subdivision: vertex " + std::to_string(v) + " is isolated", {v});
    }
  }
  const auto src = g.edges();
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < src.size(); ++k) {
    const auto s = static_cast<Vertex>(g.n() + k);
    edges.push_back({src[k].u, s});
    edges.push_back({src[k].v, s});
  }
  GadgetInstance inst{Graph(g.n() + src.size(), edges), GadgetInstance::Provenance::subdivision, 0, g,
                      "graph = B_G"};
  return inst;
}

struct RelationReport {
  enum class Status { pass, fail, skipped };
  Status status = Status::skipped;
  std::string detail;  // both sides' values, or the skip reason
};

inline std::string_view name(RelationReport::Status s) {
  switch (s) {
    case RelationReport::Status::pass: return "pass";
    case RelationReport::Status::fail: return "fail";
    case RelationReport::Status::skipped: return "skipped";
  }
  return "?";
}

// Exact upper clique transversal number, using subset search while it fits
// and branch and bound beyond.
inline std::size_t exact_uct_value(const Graph& g, const OracleLimits& limits = {}) {
  if (g.n() <= limits.max_n) return uct_oracle(g, limits).value;
  return uct_branch_and_bound(g, limits).value;
}

// Evaluates the instance's identity with the oracles. Oracle caps turn into a
// skipped report.
inline RelationReport check_relation(const GadgetInstance& inst, const OracleLimits& limits = {}) {
  using Status = RelationReport::Status;
  RelationReport rep;
  auto verdict = [&](bool ok, std::string detail) {
    rep.status = ok ? Status::pass : Status::fail;
    rep.detail = std::move(detail);
  };
  try {
    switch (inst.provenance) {
      case GadgetInstance::Provenance::chordal_ssf: {
        if (!inst.source) throw std::invalid_argument("check_relation: chordal gadget without source");
        const std::size_t ell = star_forest_oracle(*inst.source, limits);
        if (ell < 2) {
          rep.status = Status::skipped;
          rep.detail = "l* = " + std::to_string(ell) + " < 2";
          break;
        }
        const std::size_t lhs = exact_uct_value(inst.graph, limits);
        const std::size_t rhs = ell + inst.source->m();
        verdict(lhs == rhs, "tau+ = " + std::to_string(lhs) + ", l* + m = " + std::to_string(ell) +
                                " + " + std::to_string(inst.source->m()) + " = " + std::to_string(rhs));
        break;
      }
      case GadgetInstance::Provenance::two_star: {
        const std::size_t tau = exact_uct_value(inst.graph, limits);
        const auto b = build_incidence_graph(inst.graph, maximal_cliques(inst.graph, limits.max_cliques));
        const std::size_t im = induced_matching_oracle(b, limits);
        verdict(tau <= inst.q + 1 && im >= 2 * inst.q,
                "tau+ = " + std::to_string(tau) + " (<= " + std::to_string(inst.q + 1) + "), im(B_G) = " +
                    std::to_string(im) + " (>= " + std::to_string(2 * inst.q) + ")");
        break;
      }
      case GadgetInstance::Provenance::line_graph: {
        if (!inst.source) throw std::invalid_argument("check_relation: line graph without source");
        const std::size_t lhs = exact_uct_value(inst.graph, limits);
        const std::size_t rhs = star_forest_oracle(*inst.source, limits);
        verdict(lhs == rhs, "tau+ = " + std::to_string(lhs) + ", l* = " + std::to_string(rhs));
        break;
      }
      case GadgetInstance::Provenance::subdivision: {
        if (!inst.source) throw std::invalid_argument("check_relation: subdivision without source");
        const auto b = build_incidence_graph(*inst.source, maximal_cliques(*inst.source, limits.max_cliques));
        const bool same = b.as_graph() == inst.graph;
        verdict(same, same ? "graph equals B_G" : "graph differs from B_G");
        break;
      }
    }
  } catch (const CapExceeded& e) {
    rep.status = Status::skipped;
    rep.detail = e.what();
  }
  return rep;
}

// Edge list with "# gadget:", "# q:", "# relation:" and "# source:" headers.
// The source line is "n m | u v | u v ...".
inline std::string serialize(const GadgetInstance& inst) {
  std::ostringstream out;
  out << "# gadget: " << name(inst.provenance) << '\n';
  if (inst.provenance == GadgetInstance::Provenance::two_star) out << "# q: " << inst.q << '\n';
  out << "# relation: " << inst.relation << '\n';
  if (inst.source) {
    out << "# source: " << inst.source->n() << ' ' << inst.source->m();
    for (const Edge& e : inst.source->edges()) out << " | " << e.u << ' ' << e.v;
    out << '\n';
  }
  out << to_edge_list(inst.graph);
  return out.str();
}

inline GadgetInstance parse_gadget(std::string_view text) {
  GadgetInstance inst{parse_graph(text), {}, 0, std::nullopt, {}};
  bool have_kind = false;
  std::size_t line_no = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    std::string_view line = detail::trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() != '#') continue;
    line = detail::trim(line.substr(1));
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    const std::string_view key = detail::trim(line.substr(0, colon));
    const std::string_view value = detail::trim(line.substr(colon + 1));
    if (key == "gadget") {
      const auto p = parse_provenance(value);
      if (!p) throw ParseError(line_no, "unknown gadget \"" + std::string(value) + "\"");
      inst.provenance = *p;
      have_kind = true;
    } else if (key == "q") {
      long long q[1];
      if (!detail::parse_ints(value, q) || q[0] < 0) throw ParseError(line_no, "malformed q");
      inst.q = static_cast<std::size_t>(q[0]);
    } else if (key == "relation") {
      inst.relation = std::string(value);
    } else if (key == "source") {
      std::string doc;
      std::string_view parts = value;
      while (true) {
        const std::size_t bar = parts.find('|');
        doc += std::string(detail::trim(parts.substr(0, bar)));
        doc += '\n';
        if (bar == std::string_view::npos) break;
        parts = parts.substr(bar + 1);
      }
      try {
        inst.source = parse_graph(doc);
      } catch (const ParseError& e) {
        throw ParseError(line_no, std::string("bad source: ") + e.what());
      }
    }
  }
  if (!have_kind) throw ParseError(0, "missing \"# gadget:\" header");
  return inst;
}

}  // namespace uct
