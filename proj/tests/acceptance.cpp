// Acceptance run: one PASS/FAIL line per criterion with its time budget.
// Exit status is nonzero when any criterion fails, except criterion 2, whose literal
// statement has counterexamples; it is reported as FAIL together with the corrected bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "epgap/core/generators.hpp"
#include "epgap/core/graph_io.hpp"
#include "epgap/epd/certificate.hpp"
#include "epgap/harness/suite.hpp"
#include "oracles.hpp"

using namespace epgap;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  bool deviation_holds = true;  // for a known deviation: the corrected statement held
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
  bool known_deviation = false;  // failure expected and documented; does not fail the run
};

std::string num(long v) { return std::to_string(v); }

/// Counts failed checks and keeps the first message.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void add(const Verdict& v, const std::string& where) {
    ++checked;
    if (!v) {
      if (failed == 0) first = where + ": " + v.clause + " (" + v.detail + ")";
      ++failed;
    }
  }
  void add(bool ok, const std::string& where) { add(ok ? Verdict::pass() : Verdict::fail("check", "false"), where); }

  Outcome outcome(const std::string& what) const {
    std::string d = num(checked) + " " + what + ", " + num(failed) + " violations";
    if (failed > 0) d += "; first: " + first;
    return {failed == 0, d};
  }
};

template <typename F>
Verdict guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return Verdict::fail("exception", e.what());
  }
}

Graph pattern_for(int i) { return i % 2 == 0 ? complete_graph(3) : complete_bipartite(2, 3); }

Outcome formulas() {
  Tally t;
  t.add(bound_th2(1, 2) == 67, "bound_th2(1,2)");
  t.add(bound_th2(2, 2) == 259, "bound_th2(2,2)");
  t.add(bound_th1(1, 6) == BigInt(3019825151LL), "bound_th1(1,6)");
  t.add(kostochka_threshold(2) == 1296.0, "kostochka_threshold(2)");
  return t.outcome("values");
}

Outcome twk2r() {
  long literal = 0;
  long free_graphs = 0;
  std::string example;
  Tally corrected;
  for (int i = 0; i < 500; ++i) {
    Rng rng(derive_seed(2, "twk2r", i));
    const Graph g = random_gnp(rng.between(1, 12), 0.1 + 0.5 * rng.unit(), rng.next());
    const int r = 2 + i % 2;
    if (is_minor(g, complete_bipartite(2, r))) continue;
    ++free_graphs;
    const int tw = treewidth_exact(g).width;
    if (tw > 2 * r - 3) {
      if (literal == 0) example = write_graph6(g) + " r=" + num(r) + " tw=" + num(tw);
      ++literal;
    }
    corrected.add(tw <= 2 * r - 2, write_graph6(g));
  }
  const bool k3 = !is_minor(complete_graph(3), complete_bipartite(2, 2)) && treewidth_exact(complete_graph(3)).width == 2;
  Outcome o;
  o.pass = literal == 0;
  o.deviation_holds = corrected.failed == 0 && free_graphs > 0;
  o.detail = num(free_graphs) + " K_{2,r}-minor-free graphs; tw <= 2r-3 violated by " + num(literal) +
             (literal ? " (first " + example + ")" : "") + (k3 ? "; K_3 with r=2 is a counterexample" : "") +
             "; corrected bound tw <= 2r-2: " + num(corrected.failed) + " violations";
  return o;
}

Outcome partition() {
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(3, "partition", i));
    const Graph g = random_gnp(rng.between(1, 40), 0.05 + 0.85 * rng.unit(), rng.next());
    const int k = 2 + i % 3;
    t.add(guarded([&] { return check::partition(g, k, stiebitz_partition(g, k)); }), write_graph6(g));
  }
  return t.outcome("graphs");
}

Outcome tree_cuts() {
  Tally t;
  for (int i = 0; i < 500; ++i) {
    Rng rng(derive_seed(4, "tree_cut", i));
    const Graph tree = random_ternary_tree(rng.between(1, 60), rng.next());
    VertexSet x(tree.n());
    for (int v = 0; v < tree.n(); ++v) {
      if (rng.chance(0.6)) x.insert(v);
    }
    const int k = 2 + i % 2;
    t.add(guarded([&] { return check::tree_cut(tree, x, k, epgap::tree_cut(tree, x, k)); }), write_graph6(tree));
  }
  return t.outcome("trees");
}

Outcome monotone_sequences() {
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(5, "es", i));
    const int k = 2 + i % 4;
    const int l = 2 + (i / 4) % 4;
    std::vector<int> seq = rng.permutation((k - 1) * (l - 1) + 1);
    for (int& v : seq) v = 5 * v + static_cast<int>(rng.below(5));
    t.add(guarded([&] { return check::monotone(seq, k, l, epgap::erdos_szekeres(seq, k, l)); }), "sequence " + num(i));
  }
  return t.outcome("sequences");
}

Outcome smalldeg() {
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(6, "smalldeg", i));
    Graph g = random_gnp(rng.between(2, 30), 0.05 + 0.8 * rng.unit(), rng.next());
    if (g.m() == 0) g = Graph(g.n(), {Edge(0, 1)});
    const int a = 1 + i % 3;
    t.add(guarded([&] { return check::low_degree(g, a, low_degree_vertices(g, a)); }), write_graph6(g));
  }
  return t.outcome("graphs");
}

Outcome independent() {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const int k = 1 + i % 2;
    const int r = 1 + (i / 2) % 3;
    const BipartiteMultiGraph b = planted_bipartite_multigraph(k, r, derive_seed(7, "independent", i));
    t.add(guarded([&] { return check::multiedges(b, k, r, disjoint_multiedges(b, k, r)); }), "instance " + num(i));
  }
  return t.outcome("multigraphs");
}

Outcome big_degec() {
  Tally t;
  for (const auto& [n, k, r] : {std::tuple{5, 1, 2}, std::tuple{9, 2, 2}}) {
    const Graph g = complete_graph(n);
    t.add(guarded([&, k = k, r = r] { return check::models(extract_k2r_from_degeneracy(g, k, r), g, complete_bipartite(2, r), k); }),
          "K_" + num(n));
  }
  return t.outcome("cases");
}

Outcome pw2() {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    Rng rng(derive_seed(9, "pw2", i));
    const Graph h = random_pw2(rng.between(1, 9), rng.next()).graph;
    t.add(guarded([&] {
            if (pathwidth_exact(h).width > 2) return Verdict::fail("generator", "pathwidth above 2");
            return check::models({check_pw2_minor_of_xi(h)}, xi_graph(h.n()), h, 1);
          }),
          write_graph6(h));
  }
  return t.outcome("graphs");
}

Outcome pack_sep() {
  Tally t;
  long splits = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(10, "pack_sep", i));
    const Graph g = random_gnp(rng.between(6, 14), 0.2 + 0.25 * rng.unit(), rng.next());
    const Graph h = pattern_for(i);
    t.add(guarded([&] {
            const WidthResult tw = treewidth_exact(g);
            const NiceTreeDecomposition ntd = make_nice(g, tw.decomposition);
            if (Verdict v = verify_nice(g, ntd); !v) return v;
            // the split node's existence and uniqueness are asserted inside; a violation throws
            const BalancedSeparation bs = balanced_separation(g, h, ntd);
            const int k = pack_exact(g, h).value;
            if (bs.pack != k) return Verdict::fail("pack", "separation reports " + num(bs.pack) + ", exact " + num(k));
            if (k == 0) return bs.pack_zero ? Verdict::pass() : Verdict::fail("pack zero", "flag not set");
            ++splits;
            return check::balanced(g, h, tw.width, bs);
          }),
          write_graph6(g));
  }
  Outcome o = t.outcome("instances");
  o.detail += ", " + num(splits) + " with pack >= 1";
  return o;
}

Outcome winwin() {
  Tally t;
  long packings = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(derive_seed(11, "winwin", i));
    const Graph g = random_gnp(rng.between(5, 13), 0.15 + 0.4 * rng.unit(), rng.next());
    const Graph h = pattern_for(i);
    const int k = rng.between(1, 3);
    t.add(guarded([&] {
            const Certificate c = epgap_winwin(g, h, k);
            if (Verdict v = verify_certificate(g, h, c); !v) return v;
            const int p = pack_exact(g, h).value;
            const CoverResult opt = cover_exact(g, h);
            if (p > opt.value) return Verdict::fail("pack <= cover", num(p) + " > " + num(opt.value));
            if (c.kind == CertificateKind::packing) {
              ++packings;
              if (p < k) return Verdict::fail("packing", "packing certificate with pack < k");
            } else if (c.cover.size() < opt.value) {
              return Verdict::fail("optimum", "cover below the exact cover number");
            }
            const HittingSetRun run = hitting_set_recursive(g, h);
            if (Verdict v = check::cover(g, h, run.cover); !v) return v;
            if (run.cover.size() < opt.value) return Verdict::fail("optimum", "recursion below the exact cover number");
            return Verdict::pass();
          }),
          write_graph6(g) + " k=" + num(k));
  }
  Outcome o = t.outcome("instances");
  o.detail += ", " + num(packings) + " packing certificates";
  return o;
}

Outcome pipelines() {
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const int k = 1 + i % 2;
    const int r = 1 + (i / 2) % 3;
    const std::uint64_t seed = derive_seed(12, "pipelines", i);
    const auto order = static_cast<PartnerOrder>(i % 3);
    t.add(guarded([&] {
            const PlantedPairs xi = planted_paired_linkage(k, (r - 1) * (r - 1) + 1, seed, order);
            if (Verdict v = verify_paired_linkage(xi.graph, xi.pairs); !v) return v;
            if (Verdict v = check::models(pairs_to_xi_models(xi.graph, xi.pairs, r, k), xi.graph, xi_graph(r), k); !v) return v;
            const PlantedPairs k2r = planted_paired_linkage(k, r, seed + 1, order);
            return check::models(pairs_to_k2r_models(k2r.graph, k2r.pairs, r, k), k2r.graph, complete_bipartite(2, r), k);
          }),
          "trial " + num(i) + " k=" + num(k) + " r=" + num(r));
  }
  return t.outcome("trials");
}

Outcome oracles() {
  Tally t;
  const Graph k3 = complete_graph(3);
  const Graph k23 = complete_bipartite(2, 3);
  t.add(pack_exact(complete_graph(6), k3).value == 2 && oracle::pack(complete_graph(6), k3) == 2, "pack K3 in K6");
  t.add(cover_exact(complete_graph(5), k3).value == 3 && oracle::cover(complete_graph(5), k3) == 3, "cover K3 in K5");
  t.add(cover_exact(k23, k23).value == 1 && oracle::cover(k23, k23) == 1, "cover K2,3 in K2,3");
  for (int r = 2; r <= 6; ++r) {
    const Graph xi = xi_graph(r);
    t.add(treewidth_exact(xi).width == 2 && oracle::treewidth_by_subsets(xi) == 2, "tw(Xi_" + num(r) + ")");
  }
  // Xi_1 is a path on three vertices
  t.add(treewidth_exact(xi_graph(1)).width == 1 && oracle::treewidth(xi_graph(1)) == 1, "tw(Xi_1)");
  return t.outcome("cross-checks");
}

Outcome determinism() {
  const std::string first = harness::to_json(harness::run_verification_suite(42, 100, {}, 1), 42).dump();
  const std::string second = harness::to_json(harness::run_verification_suite(42, 100, {}, 1), 42).dump();
  const std::string threaded = harness::to_json(harness::run_verification_suite(42, 100, {}, 4), 42).dump();
  const auto parsed = nlohmann::json::parse(first);
  long failures = 0;
  for (const auto& r : parsed.at("reports")) failures += r.at("failures").get<long>();
  Outcome o;
  o.pass = first == second && first == threaded && failures == 0 && parsed.at("reports").size() == 15;
  o.detail = num(static_cast<long>(first.size())) + " bytes; runs " + (first == second ? "identical" : "differ") +
             ", 1 vs 4 threads " + (first == threaded ? "identical" : "differ") + ", " + num(failures) + " failures";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "formula fidelity", 1, formulas},
      {2, "no K_{2,r} minor => tw <= 2r-3", 300, twk2r, true},
      {3, "partition degree bound", 120, partition},
      {4, "tree cut", 60, tree_cuts},
      {5, "monotone subsequences", 30, monotone_sequences},
      {6, "low-degree vertices", 60, smalldeg},
      {7, "disjoint heavy multiedges", 60, independent},
      {8, "K_{2,r} models from contraction degeneracy", 60, big_degec},
      {9, "pathwidth-2 graphs in Xi_n", 600, pw2},
      {10, "balanced separations", 600, pack_sep},
      {11, "win/win soundness", 900, winwin},
      {12, "pipeline extraction", 300, pipelines},
      {13, "oracle cross-checks", 120, oracles},
      {14, "determinism", 600, determinism},
  };
  int hard_failures = 0;
  int passed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    passed += o.pass ? 1 : 0;
    const bool excused = c.known_deviation && o.deviation_holds;
    if (!o.pass && !excused) ++hard_failures;
    std::printf("%s %2d %-44s %8.2fs / %4.0fs  %s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_seconds,
                o.detail.c_str(), !o.pass && excused ? " [documented deviation]" : "");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed, %d unexpected failures\n", passed, criteria.size(), hard_failures);
  return hard_failures == 0 ? 0 : 1;
}
