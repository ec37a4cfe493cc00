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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uct {

using Vertex = std::int32_t;

// Malformed edge-list or gadget document. `line()` is 1-based, 0 when the
// problem is not tied to a line (e.g. missing edge lines at end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The input is not in the requested graph class. When the class has a small
// forbidden structure (P4 for cographs, a triangle for line-graph sources),
// the offending vertices are attached.
class RecognitionError : public std::runtime_error {
 public:
  explicit RecognitionError(const std::string& what, std::vector<Vertex> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

// A configured resource cap (vertex count, clique count, edge count) was hit.
// Never downgraded to an approximate answer.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uct
