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

// Acceptance run. Prints one line per criterion and exits nonzero if any
// criterion fails. Deterministic: every suite draws from a fixed seed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "uct/uct.hpp"

namespace {

using namespace uct;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

bool witness_ok(const Graph& g, const UctResult& r) {
  const auto v = verify_minimal_ct(g, r.witness.vertices);
  return accepted(v) && r.value == r.witness.vertices.size();
}

std::size_t im_of_b(const Graph& g) {
  OracleLimits lim;
  lim.max_matching_edges = 400;
  return induced_matching_oracle(build_incidence_graph(g, maximal_cliques(g)), lim);
}

constexpr int kSuite = 1000;

std::vector<Graph> split_suite() {
  Rng rng(101);
  std::vector<Graph> out;
  for (int i = 0; i < kSuite; ++i) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t k = rng() % (n + 1);
    out.push_back(random_split_graph(n, k, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng));
  }
  return out;
}

std::vector<Graph> pig_suite() {
  Rng rng(202);
  std::vector<Graph> out;
  for (int i = 0; i < kSuite; ++i) {
    const std::size_t n = 1 + rng() % 10;
    out.push_back(random_unit_interval_graph(n, 0.3 + 2.0 * static_cast<double>(rng() % 100) / 100.0, rng));
  }
  return out;
}

std::vector<Graph> cograph_suite() {
  Rng rng(303);
  std::vector<Graph> out;
  for (int i = 0; i < kSuite; ++i) {
    const std::size_t n = 1 + rng() % 10;
    out.push_back(random_cograph(n, static_cast<double>(rng() % 101) / 100.0, rng));
  }
  return out;
}

std::vector<Graph> forest_suite() {
  Rng rng(404);
  std::vector<Graph> out;
  for (int i = 0; i < kSuite; ++i) {
    const std::size_t n = 1 + rng() % 10;
    out.push_back(random_forest(n, 0.5 + 0.5 * static_cast<double>(rng() % 101) / 100.0, rng));
  }
  return out;
}

Outcome suite_against_oracle(const std::vector<Graph>& suite, const char* label,
                             const std::function<UctResult(const Graph&)>& solve) {
  Outcome o;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const Graph& g = suite[i];
    const UctResult r = solve(g);
    const std::size_t expected = uct_oracle(g).value;
    if (r.value != expected) {
      fail(o, std::string(label) + " #" + std::to_string(i) + ": solver " + std::to_string(r.value) +
                  " vs oracle " + std::to_string(expected));
    } else if (!witness_ok(g, r)) {
      fail(o, std::string(label) + " #" + std::to_string(i) + ": witness rejected");
    }
  }
  return o;
}

Outcome criterion1(const std::vector<Graph>& split, const std::vector<Graph>& pig,
                   const std::vector<Graph>& co, const std::vector<Graph>& forest) {
  Outcome o;
  const Outcome parts[] = {
      suite_against_oracle(split, "split", [](const Graph& g) { return uct_split(g, split_partition(g)); }),
      suite_against_oracle(pig, "proper interval", [](const Graph& g) { return uct_proper_interval(g); }),
      suite_against_oracle(co, "cograph", [](const Graph& g) { return uct_cograph(g); }),
      suite_against_oracle(forest, "forest", [](const Graph& g) { return uct_triangle_free(g); }),
  };
  for (const auto& p : parts) {
    if (!p.pass) fail(o, p.detail);
  }
  if (o.pass) {
    o.detail = std::to_string(split.size()) + " split, " + std::to_string(pig.size()) + " proper interval, " +
               std::to_string(co.size()) + " cographs, " + std::to_string(forest.size()) +
               " forests agree with the oracle; all witnesses verified";
  }
  return o;
}

Outcome criterion2(const std::vector<Graph>& split) {
  Outcome o;
  std::size_t maximal = 0;
  for (std::size_t i = 0; i < split.size(); ++i) {
    const Graph& g = split[i];
    const SplitPartition p = split_partition(g);
    const std::size_t alpha = independence_number_oracle(g);
    std::size_t expected = alpha;
    if (p.k_is_maximal_clique) {
      ++maximal;
      std::vector<char> in_i(g.n(), 0);
      for (Vertex u : p.i_set) in_i[static_cast<std::size_t>(u)] = 1;
      std::size_t delta = g.n();
      for (Vertex v : p.k_set) {
        std::size_t d = 0;
        for (Vertex w : g.neighbors(v)) d += in_i[static_cast<std::size_t>(w)];
        delta = std::min(delta, d);
      }
      expected = alpha - delta + 1;
    }
    const std::size_t got = uct_split(g, p).value;
    if (got != expected) {
      fail(o, "#" + std::to_string(i) + ": solver " + std::to_string(got) + " vs formula " +
                  std::to_string(expected));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(split.size()) + " split graphs (" + std::to_string(maximal) +
               " with K maximal) match the formula";
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  Rng rng(505);
  std::size_t tight = 0;
  const int count = 2000;
  for (int i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = random_graph(n, static_cast<double>(rng() % 101) / 100.0, rng);
    const std::size_t tau = uct_oracle(g).value;
    const std::size_t im = im_of_b(g);
    if (tau > im) {
      fail(o, "graph #" + std::to_string(i) + ": tau+ " + std::to_string(tau) + " > im " + std::to_string(im));
    }
    tight += tau == im;
  }
  if (o.pass) {
    o.detail = std::to_string(count) + " random graphs, zero violations (" + std::to_string(tight) + " tight)";
  }
  return o;
}

Outcome criterion4(const std::vector<Graph>& pig) {
  Outcome o;
  for (std::size_t i = 0; i < pig.size(); ++i) {
    const std::size_t tau = uct_proper_interval(pig[i]).value;
    const std::size_t im = im_of_b(pig[i]);
    if (tau != im) {
      fail(o, "#" + std::to_string(i) + ": tau+ " + std::to_string(tau) + " vs im " + std::to_string(im));
    }
  }
  if (o.pass) o.detail = std::to_string(pig.size()) + " proper interval graphs with tau+ = im(B_G)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::string values;
  for (std::size_t q : {2u, 3u, 4u}) {
    const GadgetInstance inst = gen_two_star(q);
    const std::size_t tau = exact_uct_value(inst.graph);
    const std::size_t im = im_of_b(inst.graph);
    if (tau != q + 1 || im != 2 * q) {
      fail(o, "q=" + std::to_string(q) + ": tau+ " + std::to_string(tau) + ", im " + std::to_string(im));
    }
    values += (values.empty() ? "" : "; ") + std::string("q=") + std::to_string(q) + ": tau+ " +
              std::to_string(tau) + ", im " + std::to_string(im);
  }
  if (o.pass) o.detail = values;
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(606);
  OracleLimits lim;
  int checked = 0, drawn = 0;
  while (checked < 500 && drawn < 100000) {
    ++drawn;
    const std::size_t n = 2 + rng() % 7;
    const Graph g = random_graph(n, 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    if (star_forest_oracle(g) < 2) continue;
    const GadgetInstance inst = gen_chordal_gadget(g);
    const RelationReport rep = check_relation(inst, lim);
    if (rep.status != RelationReport::Status::pass) {
      fail(o, "source #" + std::to_string(drawn) + " (" + std::string(name(rep.status)) + "): " + rep.detail);
      break;
    }
    ++checked;
  }
  if (o.pass && checked < 500) fail(o, "only " + std::to_string(checked) + " sources with l* >= 2");
  if (o.pass) o.detail = std::to_string(checked) + " sources, zero violations";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(707);
  int checked = 0, drawn = 0;
  while (checked < 500 && drawn < 100000) {
    ++drawn;
    const std::size_t n = 3 + rng() % 6;
    auto g = random_triangle_free_min_degree2(n, 0.6, rng, 1);
    if (!g) continue;
    const RelationReport rep = check_relation(gen_line_graph(*g));
    if (rep.status != RelationReport::Status::pass) {
      fail(o, "source #" + std::to_string(drawn) + " (" + std::string(name(rep.status)) + "): " + rep.detail);
      break;
    }
    ++checked;
  }
  if (o.pass && checked < 500) fail(o, "only " + std::to_string(checked) + " sources generated");
  if (o.pass) o.detail = std::to_string(checked) + " triangle-free min-degree-2 sources, zero violations";
  return o;
}

Outcome criterion8(const std::vector<Graph>& co) {
  Outcome o;
  for (std::size_t i = 0; i < co.size(); ++i) {
    const std::size_t tau = uct_cograph(co[i]).value;
    const std::size_t alpha = independence_number_oracle(co[i]);
    if (tau != alpha) {
      fail(o, "#" + std::to_string(i) + ": tau+ " + std::to_string(tau) + " vs alpha " + std::to_string(alpha));
    }
  }
  if (o.pass) o.detail = std::to_string(co.size()) + " cographs with tau+ = alpha";
  return o;
}

// Mean wall time in seconds of `solve` over `runs` calls, after one untimed
// warm-up call.
double mean_seconds(const std::function<std::size_t()>& solve, int runs) {
  double total = 0;
  std::size_t sink = solve();
  for (int i = 0; i < runs; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    sink += solve();
    total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  if (sink == static_cast<std::size_t>(-1)) std::puts("");
  return total / runs;
}

// Gate: n = 2e5 under 2 s, and the per-vertex time from 1e5 to 2e5 within
// 1.3x. The 4e5 run is reported only; at that size each run's fresh buffers
// cost page faults that dominate the variance.
Outcome criterion9() {
  Outcome o;
  constexpr int kRuns = 5;
  constexpr std::size_t kHalf = 100000, kBase = 200000, kDouble = 400000;
  Rng rng(909);
  char buf[320];
  std::string detail;
  auto measure = [&](const char* label, const std::function<Graph(std::size_t)>& make,
                     const std::function<std::size_t(const Graph&)>& solve) {
    const Graph half = make(kHalf), base = make(kBase), twice = make(kDouble);
    const double th = mean_seconds([&] { return solve(half); }, kRuns);
    const double tb = mean_seconds([&] { return solve(base); }, kRuns);
    const double td = mean_seconds([&] { return solve(twice); }, kRuns);
    const double ratio = tb / (2.0 * th);
    std::snprintf(buf, sizeof buf,
                  "%s n=%zu %.3fs, n=%zu %.3fs (per-vertex ratio %.2f); n=%zu %.3fs (ratio %.2f, not gated)",
                  label, half.n(), th, base.n(), tb, ratio, twice.n(), td, td / (2.0 * tb));
    detail += (detail.empty() ? "" : "; ") + std::string(buf);
    if (tb >= 2.0) fail(o, std::string(label) + " too slow");
    if (ratio > 1.3) fail(o, std::string(label) + " scaling above 1.3");
  };
  measure(
      "split", [&](std::size_t n) { return random_sparse_split_graph(n, 300, 3, rng); },
      [](const Graph& g) { return uct_split(g, split_partition(g)).value; });
  measure(
      "proper interval", [&](std::size_t n) { return random_unit_interval_graph(n, 4.0, rng); },
      [](const Graph& g) { return uct_proper_interval(g).value; });
  o.detail = o.pass ? detail : o.detail + " | " + detail;
  return o;
}

Outcome criterion10(const std::vector<Graph>& pig) {
  Outcome o;
  std::size_t sweeps = 0, iterations = 0;
  std::size_t branches[3] = {0, 0, 0};
  // The n <= 10 suite rarely takes more than a few steps per component, so
  // larger unit interval graphs are swept as well.
  std::vector<Graph> graphs = pig;
  Rng rng(1010);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 20 + rng() % 181;
    graphs.push_back(random_unit_interval_graph(n, 0.8 + 3.0 * static_cast<double>(rng() % 100) / 100.0, rng));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    ProperIntervalTrace trace;
    try {
      uct_proper_interval(g, &trace);
    } catch (const std::logic_error& e) {
      fail(o, "#" + std::to_string(i) + ": " + e.what());
      continue;
    }
    for (const ChangTrace& t : trace.sweeps) {
      ++sweeps;
      iterations += t.iterations;
      for (int k = 0; k < 3; ++k) branches[k] += t.branch_counts[k];
      if (t.branch_counts[0] + t.branch_counts[1] + t.branch_counts[2] != t.iterations) {
        fail(o, "#" + std::to_string(i) + ": branch count differs from iteration count");
      }
    }
    for (const auto& comp : connected_components(g)) {
      const Graph h = induced_subgraph(g, comp);
      const IncidenceGraph b = ordered_incidence_graph(h, proper_interval_order(h));
      const InducedMatching m = chang_induced_matching(b);
      if (!is_induced_matching(b, m)) fail(o, "#" + std::to_string(i) + ": matching not induced");
      if (has_crossing_edges(b, m)) fail(o, "#" + std::to_string(i) + ": crossing matching edges");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(pig.size()) + " suite graphs + " + std::to_string(graphs.size() - pig.size()) +
               " larger ones, " + std::to_string(sweeps) + " sweeps, " + std::to_string(iterations) +
               " iterations (branches a/b/c: " + std::to_string(branches[0]) + "/" +
               std::to_string(branches[1]) + "/" + std::to_string(branches[2]) + "), zero assertion failures";
  }
  return o;
}

}  // namespace

int main() {
  const auto split = split_suite();
  const auto pig = pig_suite();
  const auto co = cograph_suite();
  const auto forest = forest_suite();

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"oracle equivalence", [&] { return criterion1(split, pig, co, forest); }},
      {"split formula", [&] { return criterion2(split); }},
      {"tau+ <= im(B_G)", [] { return criterion3(); }},
      {"proper interval tau+ = im(B_G)", [&] { return criterion4(pig); }},
      {"two-star gap", [] { return criterion5(); }},
      {"chordal gadget correspondence", [] { return criterion6(); }},
      {"line graph identity", [] { return criterion7(); }},
      {"cograph tau+ = alpha", [&] { return criterion8(co); }},
      {"linear-time performance", [] { return criterion9(); }},
      {"matching sweep assertions", [&] { return criterion10(pig); }},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("[%s] %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
