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
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "uct/cliques.hpp"
#include "uct/recognize.hpp"
#include "uct/result.hpp"

namespace uct {

namespace detail {

// Post-order of the cotree nodes; validates shape and leaf bijection.
inline std::vector<int> cotree_post_order(const Graph& g, const Cotree& t) {
  const std::size_t size = t.nodes.size();
  if (g.n() == 0) {
    if (t.root >= 0) throw std::invalid_argument("cotree does not match graph: empty graph");
    return {};
  }
  if (t.root < 0 || static_cast<std::size_t>(t.root) >= size) {
    throw std::invalid_argument("cotree does not match graph: bad root");
  }
  std::vector<int> post;
  post.reserve(size);
  std::vector<char> state(size, 0);
  std::vector<char> leaf_seen(g.n(), 0);
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int id = stack.back();
    const auto& node = t.nodes[static_cast<std::size_t>(id)];
    if (node.kind == Cotree::Kind::leaf) {
      if (node.vertex < 0 || static_cast<std::size_t>(node.vertex) >= g.n() ||
          leaf_seen[static_cast<std::size_t>(node.vertex)]++) {
        throw std::invalid_argument("cotree does not match graph: leaves are not a bijection");
      }
      if (state[static_cast<std::size_t>(id)]++) throw std::invalid_argument("cotree node reused");
      post.push_back(id);
      stack.pop_back();
      continue;
    }
    auto& st = state[static_cast<std::size_t>(id)];
    if (st == 0) {
      for (int c : {node.left, node.right}) {
        if (c < 0 || static_cast<std::size_t>(c) >= size || state[static_cast<std::size_t>(c)]) {
          throw std::invalid_argument("cotree is not a full binary tree");
        }
      }
      st = 1;
      stack.push_back(node.right);
      stack.push_back(node.left);
    } else {
      post.push_back(id);
      stack.pop_back();
    }
  }
  if (post.size() != 2 * g.n() - 1) {
    throw std::invalid_argument("cotree does not match graph: leaf count");
  }
  return post;
}

}  // namespace detail

// Cotree dynamic program, linear in the tree size. A leaf contributes 1; a
// union node adds its children's values (the witness is the union of theirs);
// a join node takes the larger child (left on ties) and that child's witness.
//
// The tree is checked against the graph cheaply: leaves biject with the
// vertices, the join nodes account for exactly m edges, and for every
// internal node one representative pair across its children is adjacent iff
// the node is a join.
//
// The witness is a maximal independent set; each member's certificate is a
// greedily extended maximal clique through it.
inline UctResult uct_cograph(const Graph& g, const Cotree& t) {
  const auto post = detail::cotree_post_order(g, t);
  const std::size_t size = t.nodes.size();
  std::vector<std::size_t> value(size, 0), leaves(size, 0);
  std::vector<Vertex> rep(size, -1);
  std::uint64_t join_edges = 0;
  for (int id : post) {
    const auto& node = t.nodes[static_cast<std::size_t>(id)];
    const auto i = static_cast<std::size_t>(id);
    if (node.kind == Cotree::Kind::leaf) {
      value[i] = 1;
      leaves[i] = 1;
      rep[i] = node.vertex;
      continue;
    }
    const auto l = static_cast<std::size_t>(node.left), r = static_cast<std::size_t>(node.right);
    leaves[i] = leaves[l] + leaves[r];
    rep[i] = rep[l];
    const bool join = node.kind == Cotree::Kind::join;
    if (g.adjacent(rep[l], rep[r]) != join) {
      throw std::invalid_argument("cotree does not match graph: vertices " + std::to_string(rep[l]) +
                                  " and " + std::to_string(rep[r]));
    }
    if (join) {
      join_edges += static_cast<std::uint64_t>(leaves[l]) * leaves[r];
      value[i] = std::max(value[l], value[r]);
    } else {
      value[i] = value[l] + value[r];
    }
  }
  if (join_edges != g.m()) throw std::invalid_argument("cotree does not match graph: edge count");

  UctResult res;
  res.method = Method::cograph;
  if (post.empty()) return res;
  res.value = value[static_cast<std::size_t>(t.root)];
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const auto& node = t.nodes[static_cast<std::size_t>(id)];
    switch (node.kind) {
      case Cotree::Kind::leaf: res.witness.vertices.push_back(node.vertex); break;
      case Cotree::Kind::union_:
        stack.push_back(node.right);
        stack.push_back(node.left);
        break;
      case Cotree::Kind::join:
        stack.push_back(value[static_cast<std::size_t>(node.left)] >=
                                value[static_cast<std::size_t>(node.right)]
                            ? node.left
                            : node.right);
        break;
    }
  }
  std::sort(res.witness.vertices.begin(), res.witness.vertices.end());
  for (Vertex v : res.witness.vertices) {
    res.witness.certificates.push_back({v, extend_to_maximal_clique(g, {v})});
  }
  return res;
}

inline UctResult uct_cograph(const Graph& g) { return uct_cograph(g, build_cotree(g)); }

}  // namespace uct
