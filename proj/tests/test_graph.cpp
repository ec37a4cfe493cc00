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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "uct/uct.hpp"

namespace uct {
namespace {

TEST(ParseGraph, PathOnThreeVertices) {
  const Graph g = parse_graph("3 2\n0 1\n1 2");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(ParseGraph, SingleVertex) {
  const Graph g = parse_graph("1 0");
  EXPECT_EQ(g.n(), 1u);
  EXPECT_EQ(g.m(), 0u);
}

TEST(ParseGraph, FourCycleIsRegular) {
  const Graph g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0");
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(ParseGraph, CommentsBlankLinesAndCrlf) {
  const Graph g = parse_graph("# a comment\r\n\r\n3 2\r\n# inside\r\n0 1\r\n  1 2  \r\n");
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(ParseGraph, DuplicateEdgesCollapse) {
  const Graph g = parse_graph("2 2\n0 1\n1 0\n");
  EXPECT_EQ(g.m(), 1u);
}

TEST(ParseGraph, ErrorsNameTheLine) {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  EXPECT_EQ(line_of("3 x\n"), 1u);
  EXPECT_EQ(line_of("3 2\n0 1\n1 3\n"), 3u);
  EXPECT_EQ(line_of("# c\n3 1\n1 1\n"), 3u);
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1\n"), 0u);
  EXPECT_EQ(line_of(""), 0u);
  EXPECT_EQ(line_of("2 1\n0 1 2\n"), 2u);
  EXPECT_EQ(line_of("2 1\n-1 0\n"), 2u);
}

TEST(GraphTest, AdjacencyIsSortedAndSymmetric) {
  const Graph g(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}});
  for (Vertex v = 0; v < 5; ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
    for (Vertex w : nb) EXPECT_TRUE(g.adjacent(w, v));
  }
}

TEST(GraphTest, RejectsSelfLoopsAndRange) {
  EXPECT_THROW(Graph(2, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST(GraphTest, RoundTripsThroughEdgeList) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(9, 0.4, rng);
    EXPECT_EQ(parse_graph(to_edge_list(g)), g);
  }
}

TEST(GraphTest, InducedSubgraphAndComponents) {
  const Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{3, 4}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{5}));
  const std::vector<Vertex> keep{2, 1, 4};
  const Graph h = induced_subgraph(g, keep);
  EXPECT_EQ(h, Graph(3, {{0, 1}}));
}

TEST(MaximalCliques, WorkedExamples) {
  EXPECT_EQ(maximal_cliques(Graph(1, {})).cliques, (std::vector<std::vector<Vertex>>{{0}}));
  EXPECT_EQ(maximal_cliques(Graph(3, {{0, 1}, {1, 2}})).cliques,
            (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));
}

TEST(MaximalCliques, ChordalGadgetHasThreeFamilies) {
  const Graph p3(3, {{0, 1}, {1, 2}});
  const auto inst = gen_chordal_gadget(p3);
  const auto list = maximal_cliques(inst.graph);
  // V, {0,1,x0}, {1,2,x1}, {x0,y0}, {x1,y1} with x = 3,4 and y = 5,6.
  EXPECT_EQ(list.cliques, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 1, 3}, {1, 2, 4}, {3, 5}, {4, 6}}));
  EXPECT_LE(list.size(), inst.graph.n());
}

TEST(MaximalCliques, MatchNaiveFilterOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 9)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Graph g = random_graph(n, p, rng);
    const auto list = maximal_cliques(g);
    ASSERT_EQ(list.cliques, brute::maximal_cliques(g)) << to_edge_list(g);
    ASSERT_TRUE(list.matches(g));
    if (is_chordal(g)) {
      EXPECT_LE(list.size(), g.n());
    }
  }
}

TEST(MaximalCliques, ChordalRouteOnLargerChordalGraphs) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_split_graph(12, 5, 0.4, rng);
    const auto order = chordal_visit_order(g);
    ASSERT_TRUE(order.has_value());
    auto chordal = chordal_maximal_cliques(g, *order);
    std::sort(chordal.begin(), chordal.end());
    EXPECT_EQ(chordal, brute::maximal_cliques(g));
  }
}

TEST(MaximalCliques, CapIsEnforced) {
  // Complement of a perfect matching on 12 vertices has 2^6 maximal cliques.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 12; ++u)
    for (Vertex v = u + 1; v < 12; ++v)
      if (!(u % 2 == 0 && v == u + 1)) edges.push_back({u, v});
  const Graph g(12, edges);
  EXPECT_EQ(maximal_cliques(g).size(), 64u);
  EXPECT_THROW(maximal_cliques(g, 10), CapExceeded);
}

TEST(MaximalCliques, SerializesOneCliquePerLine) {
  EXPECT_EQ(to_string(maximal_cliques(Graph(3, {{0, 1}, {1, 2}}))), "0 1\n1 2\n");
}

TEST(IncidenceGraph, PathOnThreeVertices) {
  const Graph g(3, {{0, 1}, {1, 2}});
  const auto b = build_incidence_graph(g, maximal_cliques(g));
  EXPECT_EQ(b.x_count, 3u);
  EXPECT_EQ(b.y_count(), 2u);
  EXPECT_EQ(b.members[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(b.members[1], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(b.incident[1], (std::vector<CliqueId>{0, 1}));
  EXPECT_EQ(b.edge_count(), 4u);
  EXPECT_FALSE(b.order_x.has_value());
}

TEST(IncidenceGraph, TriangleHasOneClique) {
  const Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto b = build_incidence_graph(g, maximal_cliques(g));
  EXPECT_EQ(b.y_count(), 1u);
  EXPECT_EQ(b.edge_count(), 3u);
}

TEST(IncidenceGraph, TwoStarIncidenceIsTheSubdivision) {
  const auto inst = gen_two_star(2);
  const auto b = build_incidence_graph(inst.graph, maximal_cliques(inst.graph));
  const auto sub = gen_subdivision(inst.graph);
  EXPECT_EQ(b.as_graph(), sub.graph);
}

TEST(IncidenceGraph, RejectsForeignCliqueList) {
  const Graph g(3, {{0, 1}, {1, 2}});
  const Graph h(3, {{0, 1}});
  EXPECT_THROW(build_incidence_graph(g, maximal_cliques(h)), std::invalid_argument);
}

TEST(IncidenceGraph, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_graph(8, 0.5, rng);
    const auto b = build_incidence_graph(g, maximal_cliques(g));
    std::size_t from_x = 0;
    for (const auto& inc : b.incident) {
      EXPECT_FALSE(inc.empty());
      from_x += inc.size();
    }
    EXPECT_EQ(from_x, b.edge_count());
    for (std::size_t y = 0; y < b.y_count(); ++y) {
      EXPECT_FALSE(b.members[y].empty());
      for (std::size_t z = 0; z < b.y_count(); ++z) {
        if (y == z) continue;
        EXPECT_FALSE(std::includes(b.members[z].begin(), b.members[z].end(), b.members[y].begin(),
                                   b.members[y].end()));
      }
      for (Vertex x : b.members[y]) EXPECT_TRUE(b.adjacent(x, static_cast<CliqueId>(y)));
    }
  }
}

TEST(Graph, RelabeledMatchesInducedSubgraph) {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(1 + rng() % 12, 0.35, rng);
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(relabeled_graph(g, order), induced_subgraph(g, order));
  }
  const Graph p3(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> dup{0, 0, 1};
  EXPECT_THROW(relabeled_graph(p3, dup), std::invalid_argument);
  const std::vector<Vertex> short_order{0, 1};
  EXPECT_THROW(relabeled_graph(p3, short_order), std::invalid_argument);
}

}  // namespace
}  // namespace uct
