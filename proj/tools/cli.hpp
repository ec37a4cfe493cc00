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

// Command-line front end. parse_cli turns argv into a CliConfig; run executes
// it against explicit streams so tests can drive it in-process.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 recognition or verification
// refutation, 3 cap exceeded.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uct/uct.hpp"

namespace uct::cli {

enum class Command { solve, oracle, verify, recognize, generate, check };
enum class Format { text, json_lines };

struct CliConfig {
  Command command = Command::solve;
  std::string input;  // empty or "-" reads stdin
  std::string class_name;
  bool witness = false;
  std::vector<Vertex> set;
  bool have_set = false;
  std::string gadget;
  std::size_t q = 2;
  std::uint64_t seed = 0;
  std::size_t max_n = OracleLimits{}.max_n;
  std::size_t max_cliques = OracleLimits{}.max_cliques;
  Format format = Format::text;
};

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kRefuted = 2;
inline constexpr int kCapExceeded = 3;

// Either a config to run or an exit code (help, usage error).
inline std::variant<CliConfig, int> parse_cli(int argc, const char* const* argv, std::ostream& out,
                                             std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Upper clique transversal number with witnesses", "uct"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--input", cfg.input, "edge-list or gadget file (default: stdin)");
  app.add_option("--class", cfg.class_name,
                 "force a class: split, proper_interval, cograph, tree, oracle; for recognize any tag");
  app.add_flag("--witness", cfg.witness, "print per-vertex certificate cliques");
  auto* set_opt = app.add_option("--set", cfg.set, "vertex set for verify (space or comma separated)")
                      ->delimiter(',')
                      ->expected(0, -1);
  app.add_option("--gadget", cfg.gadget, "chordal-ssf, two-star, line-graph, subdivision");
  app.add_option("--q", cfg.q, "two-star parameter")->check(CLI::Range(2, 1 << 20));
  app.add_option("--seed", cfg.seed, "seed for random sources (default 0)");
  app.add_option("--max-n", cfg.max_n, "oracle vertex cap")->check(CLI::PositiveNumber);
  app.add_option("--max-cliques", cfg.max_cliques, "maximal clique enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));

  const std::pair<const char*, Command> commands[] = {
      {"solve", Command::solve},         {"oracle", Command::oracle},
      {"verify", Command::verify},       {"recognize", Command::recognize},
      {"generate", Command::generate},   {"check", Command::check},
  };
  const char* help[] = {"compute tau+ with the fastest applicable method",
                        "compute tau+ by exhaustive search",
                        "check that --set is a minimal clique transversal",
                        "list class tags, or certify --class",
                        "write a gadget instance",
                        "evaluate a gadget instance's relation"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) subs.push_back(app.add_subcommand(commands[i].first, help[i]));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) cfg.command = commands[i].second;
  }
  cfg.have_set = set_opt->count() > 0;
  cfg.format = format == "json-lines" ? Format::json_lines : Format::text;
  return cfg;
}

namespace detail {

using nlohmann::json;

inline std::string read_input(const CliConfig& cfg, std::istream& in) {
  std::ostringstream buf;
  if (cfg.input.empty() || cfg.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(cfg.input, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open " + cfg.input);
    buf << f.rdbuf();
  }
  return buf.str();
}

inline json to_json(const TransversalWitness& w) {
  json certs = json::array();
  for (const auto& c : w.certificates) certs.push_back({{"vertex", c.vertex}, {"clique", c.clique}});
  return {{"witness", w.vertices}, {"certificates", certs}};
}

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"m", g.m()}, {"edges", edges}};
}

inline std::string_view name(Refutation::Kind k) {
  switch (k) {
    case Refutation::Kind::missed_clique: return "missed_clique";
    case Refutation::Kind::no_private_clique: return "no_private_clique";
    case Refutation::Kind::invalid_set: return "invalid_set";
  }
  return "?";
}

class Runner {
 public:
  Runner(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
      : cfg_(cfg), in_(in), out_(out), err_(err) {
    limits_.max_n = cfg.max_n;
    limits_.max_cliques = cfg.max_cliques;
  }

  int run() {
    try {
      switch (cfg_.command) {
        case Command::solve: return solve();
        case Command::oracle: return oracle();
        case Command::verify: return verify();
        case Command::recognize: return recognize_cmd();
        case Command::generate: return generate();
        case Command::check: return check();
      }
    } catch (const ParseError& e) {
      return error("parse", e.what(), kInputError);
    } catch (const std::ios_base::failure& e) {
      return error("io", e.what(), kInputError);
    } catch (const RecognitionError& e) {
      return refuted_class(e);
    } catch (const CapExceeded& e) {
      return error("cap_exceeded", e.what(), kCapExceeded);
    } catch (const std::invalid_argument& e) {
      return error("invalid_argument", e.what(), kInputError);
    }
    return kInputError;
  }

 private:
  bool json_mode() const { return cfg_.format == Format::json_lines; }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

  int error(std::string_view kind, const std::string& message, int code) {
    if (json_mode()) {
      emit({{"error", kind}, {"message", message}});
    } else {
      err_ << "error: " << message << '\n';
    }
    return code;
  }

  int refuted_class(const RecognitionError& e) {
    if (json_mode()) {
      emit({{"refutation", "recognition"}, {"message", e.what()}, {"witness", e.witness()}});
    } else {
      out_ << "refutation recognition: " << e.what() << '\n';
    }
    return kRefuted;
  }

  Graph load_graph() { return parse_graph(read_input(cfg_, in_)); }

  int print_result(const UctResult& r, std::string_view command) {
    if (json_mode()) {
      json j = {{"command", command}, {"value", r.value}, {"method", name(r.method)}, {"verified", r.verified}};
      const json w = to_json(r.witness);
      j["witness"] = w["witness"];
      if (cfg_.witness) j["certificates"] = w["certificates"];
      emit(j);
    } else {
      out_ << serialize(r, cfg_.witness);
    }
    return kOk;
  }

  int solve() {
    const Graph g = load_graph();
    DispatchOptions opts;
    opts.limits = limits_;
    if (!cfg_.class_name.empty()) {
      opts.forced = parse_method(cfg_.class_name);
      if (!opts.forced) return error("usage", "unknown class \"" + cfg_.class_name + "\"", kInputError);
    }
    return print_result(uct_dispatch(g, opts), "solve");
  }

  int oracle() {
    const Graph g = load_graph();
    auto o = uct_oracle(g, limits_);
    UctResult r;
    r.value = o.value;
    r.witness = std::move(o.witness);
    r.method = Method::oracle;
    r.verified = true;
    return print_result(r, "oracle");
  }

  int verify() {
    if (!cfg_.have_set) return error("usage", "verify needs --set", kInputError);
    const Graph g = load_graph();
    const auto v = verify_minimal_ct(g, cfg_.set, limits_);
    if (const auto* w = std::get_if<TransversalWitness>(&v)) {
      if (json_mode()) {
        json j = to_json(*w);
        j["command"] = "verify";
        j["minimal"] = true;
        emit(j);
      } else {
        out_ << "minimal clique transversal " << join_ids(w->vertices) << '\n';
        for (const auto& c : w->certificates) out_ << "cert " << c.vertex << ": " << join_ids(c.clique) << '\n';
      }
      return kOk;
    }
    const auto& ref = std::get<Refutation>(v);
    if (json_mode()) {
      json j = {{"command", "verify"}, {"minimal", false}, {"refutation", name(ref.kind)}};
      if (ref.kind == Refutation::Kind::missed_clique) j["clique"] = ref.clique;
      if (ref.vertex >= 0) j["vertex"] = ref.vertex;
      if (!ref.detail.empty()) j["detail"] = ref.detail;
      emit(j);
    } else {
      out_ << "refutation " << name(ref.kind);
      if (ref.kind == Refutation::Kind::missed_clique) out_ << ": clique " << join_ids(ref.clique);
      if (ref.kind == Refutation::Kind::no_private_clique) out_ << ": vertex " << ref.vertex;
      if (ref.kind == Refutation::Kind::invalid_set) {
        out_ << ": " << ref.detail;
        if (ref.vertex >= 0) out_ << ' ' << ref.vertex;
      }
      out_ << '\n';
    }
    return kRefuted;
  }

  // Certificate text for one class; throws RecognitionError if g is not in it.
  std::string certify(const Graph& g, GraphClass c) {
    switch (c) {
      case GraphClass::split: {
        const auto p = split_partition(g);
        return "K " + join_ids(p.k_set) + " | I " + join_ids(p.i_set) +
               (p.k_is_maximal_clique ? " | K maximal" : " | K not maximal");
      }
      case GraphClass::chordal: {
        auto order = chordal_visit_order(g);
        if (!order) throw RecognitionError("not chordal");
        std::vector<Vertex> peo(order->rbegin(), order->rend());
        return "peo " + join_ids(peo);
      }
      case GraphClass::proper_interval: return "order " + join_ids(proper_interval_order(g).order);
      case GraphClass::cograph: return "cotree " + to_string(build_cotree(g));
      case GraphClass::tree: {
        if (auto cycle = uct::detail::find_cycle(g); !cycle.empty()) {
          throw RecognitionError("not a forest: cycle " + join_ids(cycle), cycle);
        }
        return "forest";
      }
      case GraphClass::bipartite: {
        const auto colors = bipartition(g);
        if (!colors) throw RecognitionError("not bipartite");
        std::vector<Vertex> side;
        for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
          if ((*colors)[static_cast<std::size_t>(v)] == 0) side.push_back(v);
        }
        return "side " + join_ids(side);
      }
      case GraphClass::triangle_free: {
        if (auto tri = find_triangle(g); !tri.empty()) {
          throw RecognitionError("not triangle-free: triangle " + join_ids(tri), tri);
        }
        return "triangle-free";
      }
    }
    return {};
  }

  int recognize_cmd() {
    const Graph g = load_graph();
    if (!cfg_.class_name.empty()) {
      const auto c = parse_graph_class(cfg_.class_name);
      if (!c) return error("usage", "unknown class \"" + cfg_.class_name + "\"", kInputError);
      const std::string cert = certify(g, *c);
      if (json_mode()) {
        emit({{"command", "recognize"}, {"class", name(*c)}, {"member", true}, {"certificate", cert}});
      } else {
        out_ << name(*c) << " yes: " << cert << '\n';
      }
      return kOk;
    }
    const ClassSet tags = recognize(g);
    std::vector<std::string> names;
    for (GraphClass c : tags.to_vector()) names.emplace_back(name(c));
    if (json_mode()) {
      emit({{"command", "recognize"}, {"classes", names}});
    } else {
      out_ << "classes";
      for (const auto& s : names) out_ << ' ' << s;
      out_ << '\n';
    }
    return kOk;
  }

  // Source for the source-based gadgets: --input if given, else a seeded
  // random graph that meets the generator's preconditions.
  Graph gadget_source(GadgetInstance::Provenance p) {
    if (!cfg_.input.empty()) return load_graph();
    Rng rng(cfg_.seed);
    std::uniform_int_distribution<std::size_t> size(4, 8);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const std::size_t n = size(rng);
      if (p == GadgetInstance::Provenance::line_graph) {
        if (auto g = random_triangle_free_min_degree2(n, 0.5, rng, 1)) return *g;
        continue;
      }
      if (p == GadgetInstance::Provenance::subdivision) {
        auto g = random_graph(n, 0.4, rng);
        bool ok = is_triangle_free(g);
        for (Vertex v = 0; ok && v < static_cast<Vertex>(n); ++v) ok = g.degree(v) > 0;
        if (ok) return g;
        continue;
      }
      auto g = random_graph(n, 0.4, rng);
      if (g.m() > 0) return g;
    }
    throw std::invalid_argument("no random source found for seed " + std::to_string(cfg_.seed));
  }

  int generate() {
    if (cfg_.gadget.empty()) return error("usage", "generate needs --gadget", kInputError);
    const auto p = parse_provenance(cfg_.gadget);
    if (!p) return error("usage", "unknown gadget \"" + cfg_.gadget + "\"", kInputError);
    GadgetInstance inst = [&] {
      switch (*p) {
        case GadgetInstance::Provenance::chordal_ssf: return gen_chordal_gadget(gadget_source(*p));
        case GadgetInstance::Provenance::two_star: return gen_two_star(cfg_.q);
        case GadgetInstance::Provenance::line_graph: return gen_line_graph(gadget_source(*p));
        case GadgetInstance::Provenance::subdivision: return gen_subdivision(gadget_source(*p));
      }
      throw std::logic_error("generate: unknown gadget");
    }();
    if (json_mode()) {
      json j = {{"command", "generate"}, {"gadget", name(inst.provenance)}, {"relation", inst.relation},
                {"graph", to_json(inst.graph)}};
      if (inst.provenance == GadgetInstance::Provenance::two_star) j["q"] = inst.q;
      if (inst.source) j["source"] = to_json(*inst.source);
      emit(j);
    } else {
      out_ << serialize(inst);
    }
    return kOk;
  }

  int check() {
    const GadgetInstance inst = parse_gadget(read_input(cfg_, in_));
    const RelationReport rep = check_relation(inst, limits_);
    if (json_mode()) {
      emit({{"command", "check"}, {"gadget", name(inst.provenance)}, {"status", name(rep.status)},
            {"detail", rep.detail}});
    } else {
      out_ << "relation " << name(rep.status) << ": " << rep.detail << '\n';
    }
    switch (rep.status) {
      case RelationReport::Status::pass: return kOk;
      case RelationReport::Status::fail: return kRefuted;
      case RelationReport::Status::skipped: return kCapExceeded;
    }
    return kOk;
  }

  const CliConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  OracleLimits limits_;
};

}  // namespace detail

inline int run(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return detail::Runner(cfg, in, out, err).run();
}

// parse_cli followed by run.
inline int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
                      std::ostream& err) {
  auto parsed = parse_cli(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<CliConfig>(parsed), in, out, err);
}

}  // namespace uct::cli
