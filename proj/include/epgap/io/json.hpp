#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "epgap/core/graph_io.hpp"
#include "epgap/epd/certificate.hpp"
#include "epgap/minors/minor_model.hpp"
#include "epgap/structure/linkage.hpp"
#include "epgap/width/mesh.hpp"

namespace epgap {

using Json = nlohmann::json;

inline Json to_json(const VertexSet& s) { return s.members(); }

inline VertexSet vertex_set_from_json(const Json& j, int n) {
  VertexSet s(n);
  for (const Json& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= n) throw ParseError("vertex " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  return s;
}

inline Json graph_json(const Graph& g) {
  return {{"n", g.n()}, {"m", g.m()}, {"graph6", g.n() <= 62 ? Json(write_graph6(g)) : Json()}, {"hash", graph_hash(g)}};
}

/// {"pattern_hash", "host_hash", "branch_sets": {"0": [...], ...}}
inline Json to_json(const MinorModel& m) {
  Json sets = Json::object();
  for (std::size_t p = 0; p < m.branch_sets.size(); ++p) sets[std::to_string(p)] = to_json(m.branch_sets[p]);
  return {{"pattern_hash", graph_hash(m.pattern)}, {"host_hash", graph_hash(m.host)}, {"branch_sets", sets}};
}

/// Rebuilds a model for the given pattern and host; the hashes must match.
inline MinorModel model_from_json(const Json& j, const Graph& pattern, const Graph& host) {
  if (j.at("pattern_hash").get<std::string>() != graph_hash(pattern)) throw ParseError("model: pattern hash mismatch");
  if (j.at("host_hash").get<std::string>() != graph_hash(host)) throw ParseError("model: host hash mismatch");
  MinorModel m{pattern, host, {}};
  const Json& sets = j.at("branch_sets");
  for (int p = 0; p < pattern.n(); ++p) {
    const std::string key = std::to_string(p);
    if (!sets.contains(key)) throw ParseError("model: missing branch set " + key);
    m.branch_sets.push_back(vertex_set_from_json(sets.at(key), host.n()));
  }
  return m;
}

inline Json to_json(const TreeDecomposition& td, const Graph& g) {
  Json bags = Json::array();
  for (const auto& b : td.bags) bags.push_back(to_json(b));
  Json edges = Json::array();
  for (const Edge& e : td.tree.edges()) edges.push_back({e.u, e.v});
  return {{"graph_hash", graph_hash(g)}, {"width", td.width}, {"bags", bags}, {"tree_edges", edges}};
}

/// PACE .td text: "s td <bags> <width+1> <n>", then "b i v..." (1-based) and tree edges.
inline std::string write_pace_td(const TreeDecomposition& td, const Graph& g) {
  std::ostringstream os;
  os << "s td " << td.node_count() << ' ' << td.width + 1 << ' ' << g.n() << '\n';
  for (int t = 0; t < td.node_count(); ++t) {
    os << "b " << t + 1;
    td.bags[t].for_each([&](int v) { os << ' ' << v + 1; });
    os << '\n';
  }
  for (const Edge& e : td.tree.edges()) os << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

inline TreeDecomposition parse_pace_td(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int nodes = -1;
  int n = -1;
  std::vector<VertexSet> bags;
  std::vector<Edge> edges;
  int lineno = 0;
  auto fail = [&](const std::string& what) { throw ParseError("td line " + std::to_string(lineno) + ": " + what); };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 's') {
      std::string s, td;
      int width1 = 0;
      if (!(ls >> s >> td >> nodes >> width1 >> n) || td != "td" || nodes < 0 || n < 0) fail("bad header");
      bags.assign(static_cast<std::size_t>(nodes), VertexSet(n));
    } else if (line[0] == 'b') {
      if (nodes < 0) fail("bag before header");
      std::string b;
      int id = 0;
      ls >> b >> id;
      if (id < 1 || id > nodes) fail("bag id out of range");
      int v = 0;
      while (ls >> v) {
        if (v < 1 || v > n) fail("vertex out of range");
        bags[id - 1].insert(v - 1);
      }
    } else {
      int a = 0, b = 0;
      if (nodes < 0 || !(ls >> a >> b) || a < 1 || b < 1 || a > nodes || b > nodes) fail("bad tree edge");
      edges.emplace_back(a - 1, b - 1);
    }
  }
  if (nodes < 0) throw ParseError("td: missing header");
  TreeDecomposition td;
  td.tree = Graph(nodes, edges);
  td.width = TreeDecomposition::width_of(bags);
  td.bags = std::move(bags);
  return td;
}

inline Json to_json(const MeshWitness& w, const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : w.tree_edges) edges.push_back({e.u, e.v});
  return {{"graph_hash", graph_hash(g)}, {"a", to_json(w.a)},       {"b", to_json(w.b)},
          {"tree_vertices", to_json(w.tree_vertices)},             {"tree_edges", edges},
          {"order", w.order},                                        {"connectivity", w.connectivity}};
}

inline Json to_json(const LinkageWitness& lw, const Graph& g) {
  Json sets = Json::array();
  Json trees = Json::array();
  for (const auto& s : lw.terminal_sets) sets.push_back(to_json(s));
  for (const auto& t : lw.trees) trees.push_back(to_json(t));
  return {{"graph_hash", graph_hash(g)}, {"terminal_sets", sets}, {"trees", trees},
          {"paths", lw.paths},           {"tree_support", to_json(lw.tree_support)}};
}

inline Json to_json(const PairedLinkage& pl, const Graph& g) {
  Json pairs = Json::array();
  for (const auto& p : pl.pairs) {
    pairs.push_back({{"first", to_json(p.first)},
                     {"second", to_json(p.second)},
                     {"first_tree", to_json(p.first_tree)},
                     {"second_tree", to_json(p.second_tree)},
                     {"paths", p.paths}});
  }
  return {{"graph_hash", graph_hash(g)}, {"pairs", pairs}, {"tree_support", to_json(pl.tree_support)}};
}

inline Json to_json(const RecursionStep& s) {
  return {{"depth", s.depth},         {"vertices", s.vertices}, {"pack", s.pack}, {"width", s.width},
          {"separator", s.separator}, {"left", s.left},         {"right", s.right}, {"over_budget", s.over_budget}};
}

/// {"type":"packing","models":[...]} or {"type":"cover","vertices":[...]}, with hashes,
/// parameters and the bound evaluation. The recursion trace is kept separate (diagnostics).
inline Json to_json(const Certificate& c, const Graph& g, const Graph& h) {
  Json j = {{"type", to_string(c.kind)},
            {"graph_hash", graph_hash(g)},
            {"pattern_hash", graph_hash(h)},
            {"k", c.k},
            {"pack", c.pack},
            {"treewidth", c.treewidth}};
  if (c.kind == CertificateKind::packing) {
    Json models = Json::array();
    for (const auto& m : c.models) models.push_back(to_json(m));
    j["models"] = models;
  } else {
    j["vertices"] = to_json(c.cover);
  }
  if (c.bound) {
    j["bound"] = {{"theorem", c.bound_name}, {"value", c.bound->str()}};
  }
  return j;
}

inline Json trace_json(const Certificate& c) {
  Json t = Json::array();
  for (const auto& s : c.trace) t.push_back(to_json(s));
  return t;
}

}  // namespace epgap
