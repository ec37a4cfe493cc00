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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "uct/oracle.hpp"

namespace uct {

// Which algorithm produced a result.
enum class Method : std::uint8_t { split, proper_interval, cograph, tree, oracle };

inline std::string_view name(Method m) {
  switch (m) {
    case Method::split: return "split";
    case Method::proper_interval: return "proper_interval";
    case Method::cograph: return "cograph";
    case Method::tree: return "tree";
    case Method::oracle: return "oracle";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  if (s == "split") return Method::split;
  if (s == "proper_interval") return Method::proper_interval;
  if (s == "cograph") return Method::cograph;
  if (s == "tree" || s == "forest") return Method::tree;
  if (s == "oracle") return Method::oracle;
  return std::nullopt;
}

// Upper clique transversal number with a witness of that size.
struct UctResult {
  std::size_t value = 0;
  TransversalWitness witness;
  Method method = Method::oracle;
  bool verified = false;  // witness re-checked against an explicit clique list
};

// Line 1 "value <k> method <tag>", line 2 the witness ids, then optionally one
// "cert <u>: <clique>" line per member.
inline std::string serialize(const UctResult& r, bool with_certificates) {
  std::string out = "value " + std::to_string(r.value) + " method " + std::string(name(r.method)) + "\n";
  out += join_ids(r.witness.vertices);
  out += '\n';
  if (with_certificates) {
    for (const auto& c : r.witness.certificates) {
      out += "cert " + std::to_string(c.vertex) + ": " + join_ids(c.clique) + "\n";
    }
  }
  return out;
}

namespace detail {

inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::vector<Vertex> out(nb.begin(), nb.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace detail

}  // namespace uct
