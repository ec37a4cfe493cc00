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
#include <span>
#include <vector>

#include "uct/incidence.hpp"
#include "uct/induced_matching.hpp"
#include "uct/recognize.hpp"
#include "uct/result.hpp"

namespace uct {

namespace detail {

// Position view of the incidence graph of one component: order positions
// [lo, hi] against clique blocks [first_block, last_block], both renumbered
// from 0. Built straight from the blocks; the monotone biconvex conditions
// are still checked.
inline OrderedIncidence block_view(std::span<const CliqueBlock> blocks, std::size_t lo, std::size_t hi,
                                   std::size_t first_block, std::size_t last_block) {
  OrderedIncidence v;
  const std::size_t nx = hi - lo + 1, ny = last_block - first_block + 1;
  v.xs.resize(nx);
  std::iota(v.xs.begin(), v.xs.end(), 0);
  v.ys.resize(ny);
  std::iota(v.ys.begin(), v.ys.end(), 0);
  v.min_x.assign(nx, ny);
  v.max_x.assign(nx, 0);
  v.min_y.resize(ny);
  v.max_y.resize(ny);
  std::vector<std::size_t> count(nx, 0);
  for (std::size_t k = 0; k < ny; ++k) {
    const CliqueBlock& blk = blocks[first_block + k];
    v.min_y[k] = blk.first - lo;
    v.max_y[k] = blk.last - lo;
    for (std::size_t pos = v.min_y[k]; pos <= v.max_y[k]; ++pos) {
      v.min_x[pos] = std::min(v.min_x[pos], k);
      v.max_x[pos] = std::max(v.max_x[pos], k);
      ++count[pos];
    }
  }
  auto fail = [] { throw std::logic_error("clique blocks do not give a monotone biconvex ordering"); };
  for (std::size_t i = 0; i < nx; ++i) {
    if (count[i] == 0 || v.max_x[i] - v.min_x[i] + 1 != count[i]) fail();
    if (i > 0 && (v.min_x[i] < v.min_x[i - 1] || v.max_x[i] < v.max_x[i - 1])) fail();
  }
  for (std::size_t k = 1; k < ny; ++k) {
    if (v.min_y[k] < v.min_y[k - 1] || v.max_y[k] < v.max_y[k - 1]) fail();
  }
  return v;
}

}  // namespace detail

// Whole-graph incidence graph with the strong ordering induced by a proper
// interval order: X in that order, cliques by their first vertex. X ids are
// vertex ids; clique ids follow the order of first vertices.
inline IncidenceGraph ordered_incidence_graph(const Graph& g, const ProperIntervalOrder& pio) {
  const auto blocks = proper_interval_clique_blocks(g, pio.order);
  IncidenceGraph b;
  b.x_count = g.n();
  b.incident.resize(g.n());
  b.members.resize(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t pos = blocks[k].first; pos <= blocks[k].last; ++pos) {
      const Vertex v = pio.order[pos];
      b.members[k].push_back(v);
      b.incident[static_cast<std::size_t>(v)].push_back(static_cast<CliqueId>(k));
    }
    std::sort(b.members[k].begin(), b.members[k].end());
  }
  std::vector<CliqueId> oy(blocks.size());
  std::iota(oy.begin(), oy.end(), 0);
  b.order_x = pio.order;
  b.order_y = std::move(oy);
  b.strong_biconvex = true;
  return b;
}

// Per-run diagnostics of uct_proper_interval.
struct ProperIntervalTrace {
  std::size_t components = 0;
  std::vector<ChangTrace> sweeps;
};

// Maximum minimal clique transversal of a proper interval graph, O(n + m).
// Each connected component is a contiguous run of the order whose clique
// blocks chain by overlap; its incidence graph gets the matching sweep and
// the saturated vertices are the transversal. Certificates are the matched
// cliques.
inline UctResult uct_proper_interval(const Graph& g, const ProperIntervalOrder& pio,
                                     ProperIntervalTrace* trace = nullptr) {
  UctResult r;
  r.method = Method::proper_interval;
  const auto& order = pio.order;
  if (!has_consecutive_closed_neighborhoods(g, order)) {
    throw std::invalid_argument("uct_proper_interval: order is not a proper interval order");
  }
  if (order.empty()) return r;
  const auto blocks = proper_interval_clique_blocks(g, order);
  ProperIntervalTrace local;

  std::size_t first_block = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const bool component_ends = k + 1 == blocks.size() || blocks[k + 1].first > blocks[k].last;
    if (!component_ends) continue;
    const std::size_t lo = blocks[first_block].first, hi = blocks[k].last;
    const auto view = detail::block_view(blocks, lo, hi, first_block, k);
    ChangTrace ct;
    const auto matched = detail::chang_sweep(view, &ct);
    local.sweeps.push_back(ct);
    ++local.components;
    for (auto [x, y] : matched) {
      const CliqueBlock& blk = blocks[first_block + y];
      std::vector<Vertex> clique(order.begin() + static_cast<std::ptrdiff_t>(blk.first),
                                 order.begin() + static_cast<std::ptrdiff_t>(blk.last + 1));
      std::sort(clique.begin(), clique.end());
      r.witness.certificates.push_back({order[lo + x], std::move(clique)});
    }
    first_block = k + 1;
  }
  std::sort(r.witness.certificates.begin(), r.witness.certificates.end(),
            [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  for (const auto& c : r.witness.certificates) r.witness.vertices.push_back(c.vertex);
  r.value = r.witness.vertices.size();
  if (trace) *trace = std::move(local);
  return r;
}

// Recognizes and solves on the cache-friendly copy from
// detail::local_interval_order, then maps the witness back to g's ids.
inline UctResult uct_proper_interval(const Graph& g, ProperIntervalTrace* trace = nullptr) {
  const auto local = detail::local_interval_order(g);
  UctResult r = uct_proper_interval(local.graph, ProperIntervalOrder{local.order}, trace);
  for (auto& c : r.witness.certificates) {
    c.vertex = local.label[static_cast<std::size_t>(c.vertex)];
    for (Vertex& v : c.clique) v = local.label[static_cast<std::size_t>(v)];
    std::sort(c.clique.begin(), c.clique.end());
  }
  std::sort(r.witness.certificates.begin(), r.witness.certificates.end(),
            [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  for (std::size_t i = 0; i < r.witness.certificates.size(); ++i) {
    r.witness.vertices[i] = r.witness.certificates[i].vertex;
  }
  return r;
}

}  // namespace uct
