// epgap command-line front end. Machine output is JSON on stdout, diagnostics go to stderr.
// Exit codes: 0 success, 1 property violation, 2 usage or size error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "epgap/core/generators.hpp"
#include "epgap/core/graph_io.hpp"
#include "epgap/epd/certificate.hpp"
#include "epgap/harness/suite.hpp"
#include "epgap/io/json.hpp"
#include "epgap/width/pathwidth.hpp"
#include "epgap/width/treewidth.hpp"

using namespace epgap;

namespace {

constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input;  // file path, "-" for stdin
  std::string pattern = "K3";
  bool pretty = false;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph read_graph(const Options& o) { return parse_graph(read_all(o.input)); }

/// K<n>, K<p>,<q>, C<n>, P<n>, S<n> (star K_{1,n}), Xi<r>; anything else is read as graph6.
Graph parse_pattern(const std::string& text) {
  std::smatch m;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  if (std::regex_match(text, m, std::regex(R"(K(\d+),(\d+))"))) return complete_bipartite(num(1), num(2));
  if (std::regex_match(text, m, std::regex(R"(K(\d+))"))) return complete_graph(num(1));
  if (std::regex_match(text, m, std::regex(R"(C(\d+))"))) return cycle_graph(num(1));
  if (std::regex_match(text, m, std::regex(R"(P(\d+))"))) return path_graph(num(1));
  if (std::regex_match(text, m, std::regex(R"(S(\d+))"))) return star_graph(num(1));
  if (std::regex_match(text, m, std::regex(R"([Xx]i(\d+))"))) return xi_graph(num(1));
  return parse_graph6(text);
}

void emit(const Json& j, const Options& o) { std::cout << (o.pretty ? j.dump(2) : j.dump()) << '\n'; }

Json width_json(const char* key, const Graph& g, const WidthResult& w) {
  return {{key, w.width}, {"graph", graph_json(g)}, {"decomposition", to_json(w.decomposition, g)}};
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("-i,--input", o.input, "graph file (graph6 or edge list); stdin when absent");
  sub->add_flag("--pretty", o.pretty, "indent JSON, tables for verify");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erdős–Pósa toolkit: widths, minors, packings, covers, bounds"};
  app.require_subcommand(1);
  Options o;
  int result = 0;

  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string fam = "gnp";
  std::string format = "graph6";
  int n = 8, p = 2, q = 3, r = 3, copies = 2;
  double density = 0.5;
  std::uint64_t seed = 1;
  gen->add_option("--family", fam, "complete|bipartite|xi|cycle|path|star|grid|ternary|gnp|tree|pw2")->required();
  gen->add_option("--n", n, "vertex count (or height for ternary)");
  gen->add_option("--p", p, "first side / grid rows");
  gen->add_option("--q", q, "second side / grid columns");
  gen->add_option("--r", r, "Xi order");
  gen->add_option("--density", density, "edge probability for gnp");
  gen->add_option("--copies", copies, "disjoint copies (family copies:<pattern>)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--format", format, "graph6|edgelist|dot")->check(CLI::IsMember({"graph6", "edgelist", "dot"}));
  gen->callback([&] {
    Graph g;
    if (fam == "complete") g = complete_graph(n);
    else if (fam == "bipartite") g = complete_bipartite(p, q);
    else if (fam == "xi") g = xi_graph(r);
    else if (fam == "cycle") g = cycle_graph(n);
    else if (fam == "path") g = path_graph(n);
    else if (fam == "star") g = star_graph(n);
    else if (fam == "grid") g = grid_graph(p, q);
    else if (fam == "ternary") g = complete_ternary_tree(n);
    else if (fam == "gnp") g = random_gnp(n, density, seed);
    else if (fam == "tree") g = random_ternary_tree(n, seed);
    else if (fam == "pw2") g = random_pw2(n, seed).graph;
    else if (fam.rfind("copies:", 0) == 0) g = disjoint_copies(copies, parse_pattern(fam.substr(7)));
    else throw ParameterError("unknown family " + fam);
    if (format == "graph6") std::cout << write_graph6(g) << '\n';
    else if (format == "edgelist") std::cout << write_edge_list(g);
    else std::cout << write_dot(g);
  });

  std::string td_format = "json";
  for (const char* name : {"tw", "pw"}) {
    auto* sub = app.add_subcommand(name, std::string("exact ") + (name[0] == 't' ? "treewidth" : "pathwidth") + " with a decomposition");
    add_input(sub, o);
    sub->add_option("--format", td_format, "json|pace")->check(CLI::IsMember({"json", "pace"}));
    const bool tree = name[0] == 't';
    sub->callback([&, tree] {
      const Limits limits = Limits::from_env();
      const Graph g = read_graph(o);
      const WidthResult w = tree ? treewidth_exact(g, limits) : pathwidth_exact(g, limits);
      if (td_format == "pace") std::cout << write_pace_td(w.decomposition, g);
      else emit(width_json(tree ? "treewidth" : "pathwidth", g, w), o);
    });
  }

  auto* minor = app.add_subcommand("minor", "is the pattern a minor of the host?");
  add_input(minor, o);
  minor->add_option("--pattern", o.pattern, "K3, K2,3, C4, P3, S3, Xi3 or graph6");
  minor->callback([&] {
    const Limits limits = Limits::from_env();
    const Graph g = read_graph(o);
    const Graph h = parse_pattern(o.pattern);
    const auto model = find_minor_model(g, h, limits);
    emit({{"minor", model.has_value()}, {"graph", graph_json(g)}, {"pattern", graph_json(h)},
          {"model", model ? to_json(*model) : Json()}},
         o);
  });

  auto* pack = app.add_subcommand("pack", "maximum number of disjoint models");
  add_input(pack, o);
  pack->add_option("--pattern", o.pattern, "pattern graph");
  pack->callback([&] {
    const Limits limits = Limits::from_env();
    const Graph g = read_graph(o);
    const Graph h = parse_pattern(o.pattern);
    const PackResult res = pack_exact(g, h, limits);
    Json models = Json::array();
    for (const auto& m : res.models) models.push_back(to_json(m));
    emit({{"pack", res.value}, {"graph", graph_json(g)}, {"pattern", graph_json(h)}, {"models", models}}, o);
  });

  auto* cover = app.add_subcommand("cover", "minimum hitting set");
  add_input(cover, o);
  cover->add_option("--pattern", o.pattern, "pattern graph");
  cover->callback([&] {
    const Limits limits = Limits::from_env();
    const Graph g = read_graph(o);
    const Graph h = parse_pattern(o.pattern);
    const CoverResult res = cover_exact(g, h, limits);
    emit({{"cover", res.value}, {"graph", graph_json(g)}, {"pattern", graph_json(h)}, {"vertices", to_json(res.vertices)}}, o);
  });

  auto* win = app.add_subcommand("epgap", "win/win certificate: k disjoint models or a hitting set");
  int k = 1;
  add_input(win, o);
  win->add_option("--pattern", o.pattern, "connected pattern graph");
  win->add_option("--k", k, "number of models wanted")->required();
  win->callback([&] {
    const Limits limits = Limits::from_env();
    const Graph g = read_graph(o);
    const Graph h = parse_pattern(o.pattern);
    const Certificate c = epgap_winwin(g, h, k, limits);
    std::cerr << trace_json(c).dump() << '\n';
    if (Verdict v = verify_certificate(g, h, c); !v) {
      std::cerr << "certificate failed verification: " << v.clause << ": " << v.detail << '\n';
      result = kViolation;
    }
    emit(to_json(c, g, h), o);
  });

  auto* bound = app.add_subcommand("bound", "evaluate a bound formula");
  std::string theorem;
  int bk = 1, br = 1;
  bound->add_option("--theorem", theorem, "th1|th2|kost")->required()->check(CLI::IsMember({"th1", "th2", "kost"}));
  bound->add_option("--k", bk, "k (th1, th2)");
  bound->add_option("--r", br, "r (th1, th2) or t (kost)");
  bound->add_flag("--pretty", o.pretty, "indent JSON");
  bound->callback([&] {
    Json j = {{"theorem", theorem}, {"k", bk}, {"r", br}};
    if (theorem == "th2") {
      j["value"] = bound_th2(bk, br).str();
    } else if (theorem == "th1") {
      const Th1Bound b = bound_th1_exact(bk, br);
      j["value"] = b.ceiling.str();
      j["exact"] = b.exact;
      j["symbolic"] = b.symbolic;
    } else {
      j["value"] = kostochka_threshold(br);
    }
    emit(j, o);
  });

  auto* verify = app.add_subcommand("verify", "run the seeded property suite");
  std::vector<std::string> lemma_list;
  int trials = 100, threads = 1;
  std::uint64_t vseed = 42;
  std::optional<std::uint64_t> replay_seed;
  verify->add_option("--lemma", lemma_list, "lemma id (repeatable); all when absent")->check(CLI::IsMember(harness::lemma_ids()));
  verify->add_option("--trials", trials, "trials per lemma")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vseed, "suite seed");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--replay", replay_seed, "rerun one trial seed of a single --lemma");
  verify->add_flag("--pretty", o.pretty, "table instead of JSON");
  verify->callback([&] {
    if (replay_seed) {
      if (lemma_list.size() != 1) throw ParameterError("--replay needs exactly one --lemma");
      const harness::TrialOutcome t = harness::replay(lemma_list[0], *replay_seed);
      emit({{"lemma", lemma_list[0]}, {"seed", *replay_seed}, {"ok", t.verdict.ok}, {"vacuous", t.vacuous},
            {"clause", t.verdict.clause}, {"detail", t.verdict.detail}, {"instance", t.instance}},
           o);
      result = t.verdict ? 0 : kViolation;
      return;
    }
    const auto reports = harness::run_verification_suite(vseed, trials, lemma_list, threads);
    bool failed = false;
    for (const auto& r : reports) {
      std::cerr << harness::timing_json(r).dump() << '\n';
      failed = failed || !r.passed();
    }
    if (o.pretty) {
      std::printf("%-16s %8s %8s %8s\n", "lemma", "trials", "vacuous", "failures");
      for (const auto& r : reports) std::printf("%-16s %8d %8d %8zu\n", r.lemma.c_str(), r.trials, r.vacuous, r.failures.size());
    } else {
      std::cout << harness::to_json(reports, vseed).dump() << '\n';
    }
    result = failed ? kViolation : 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return result;
}
