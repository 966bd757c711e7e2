#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "epgap/core/generators.hpp"
#include "epgap/core/graph_io.hpp"
#include "epgap/core/rng.hpp"
#include "epgap/epd/hitting_set.hpp"
#include "epgap/harness/properties.hpp"
#include "epgap/structure/degree_lemmas.hpp"
#include "epgap/structure/extraction.hpp"
#include "epgap/structure/linkage.hpp"
#include "epgap/structure/minor_lemmas.hpp"
#include "epgap/structure/planted.hpp"
#include "epgap/width/mesh.hpp"
#include "epgap/width/nice.hpp"
#include "epgap/width/treewidth.hpp"

namespace epgap::harness {

/// Result of one trial. A vacuous trial drew an instance outside the lemma's hypothesis
/// (e.g. a graph that does contain K_{2,r}); it counts as a trial but checks nothing.
struct TrialOutcome {
  Verdict verdict = Verdict::pass();
  bool vacuous = false;
  std::string instance;  // enough to rebuild the input by hand (graph6, parameters)
};

struct FailureRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string clause;
  std::string detail;
  std::string instance;
};

struct VerificationReport {
  std::string lemma;
  std::string distribution;
  int trials = 0;
  int vacuous = 0;
  std::vector<FailureRecord> failures;
  double seconds = 0;      // wall time, reported on the diagnostics stream only
  double worst_trial = 0;  // slowest trial in seconds

  bool passed() const { return failures.empty(); }
};

/// The implementations under test. The suite calls these, so a test can swap one for a
/// deliberately broken version and watch the harness catch it.
struct Implementations {
  std::function<Partition(const Graph&, int)> partition = [](const Graph& g, int k) { return stiebitz_partition(g, k); };
  std::function<std::vector<VertexSet>(const Graph&, const VertexSet&, int)> tree_cut =
      [](const Graph& t, const VertexSet& x, int k) { return epgap::tree_cut(t, x, k); };
  std::function<MonotoneSubsequence(const std::vector<int>&, int, int)> erdos_szekeres =
      [](const std::vector<int>& s, int k, int l) { return epgap::erdos_szekeres(s, k, l); };
  std::function<VertexSet(const Graph&, int)> low_degree = [](const Graph& g, int a) { return low_degree_vertices(g, a); };
  std::function<VertexSet(const Graph&, const Graph&)> hitting_set = [](const Graph& g, const Graph& h) {
    return hitting_set_recursive(g, h).cover;
  };
};

struct Lemma {
  std::string id;
  std::string distribution;
  std::function<TrialOutcome(std::uint64_t seed)> trial;
};

namespace detail {

inline std::string g6(const Graph& g) { return write_graph6(g); }

inline Graph random_graph(Rng& rng, int lo, int hi, double plo, double phi) {
  const int n = rng.between(lo, hi);
  const double p = plo + (phi - plo) * rng.unit();
  return random_gnp(n, p, rng.next());
}

inline Graph pattern(int which) { return which == 0 ? complete_graph(3) : complete_bipartite(2, 3); }

inline std::string pattern_name(int which) { return which == 0 ? "K3" : "K2,3"; }

}  // namespace detail

/// The 15 lemma checks, in fixed order.
inline std::vector<Lemma> lemmas(const Implementations& impl = {}) {
  using detail::g6;
  std::vector<Lemma> out;

  out.push_back({"smalldeg", "G(n,p), n in [2,30], p in [0.05,0.85], a in {1,2,3}; edgeless graphs are vacuous",
                 [impl](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph g = detail::random_graph(rng, 2, 30, 0.05, 0.85);
                   const int a = rng.between(1, 3);
                   TrialOutcome t{Verdict::pass(), false, g6(g) + " a=" + std::to_string(a)};
                   if (g.m() == 0) {
                     t.vacuous = true;
                     return t;
                   }
                   t.verdict = check::low_degree(g, a, impl.low_degree(g, a));
                   return t;
                 }});

  out.push_back({"tree_cut", "random ternary tree, n in [1,60], each vertex marked w.p. 0.6, k in {2,3}",
                 [impl](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph t = random_ternary_tree(rng.between(1, 60), rng.next());
                   VertexSet x(t.n());
                   for (int v = 0; v < t.n(); ++v) {
                     if (rng.chance(0.6)) x.insert(v);
                   }
                   const int k = rng.between(2, 3);
                   return TrialOutcome{check::tree_cut(t, x, k, impl.tree_cut(t, x, k)), false,
                                       g6(t) + " X=" + x.to_string() + " k=" + std::to_string(k)};
                 }});

  out.push_back({"stiebitz", "G(n,p), n in [1,40], p in [0.05,0.9], k in {2,3,4}", [impl](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph g = detail::random_graph(rng, 1, 40, 0.05, 0.9);
                   const int k = rng.between(2, 4);
                   return TrialOutcome{check::partition(g, k, impl.partition(g, k)), false, g6(g) + " k=" + std::to_string(k)};
                 }});

  out.push_back({"erdos_szekeres", "random permutation of length (k-1)(l-1)+1 scaled to distinct values, k,l in [2,5]",
                 [impl](std::uint64_t seed) {
                   Rng rng(seed);
                   const int k = rng.between(2, 5);
                   const int l = rng.between(2, 5);
                   std::vector<int> seq = rng.permutation((k - 1) * (l - 1) + 1);
                   for (int& v : seq) v = 3 * v - 7;
                   std::string inst = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " seq=";
                   for (int v : seq) inst += std::to_string(v) + ",";
                   return TrialOutcome{check::monotone(seq, k, l, impl.erdos_szekeres(seq, k, l)), false, inst};
                 }});

  out.push_back({"path_tree", "random ternary tree, n in [1,80]; longest path and its path partition",
                 [](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph t = random_ternary_tree(rng.between(1, 80), rng.next());
                   const auto path = long_path(t);
                   return TrialOutcome{check::long_path(t, path, path_partition(t, path)), false, g6(t)};
                 }});

  out.push_back({"independent", "planted balanced bipartite multigraph, k in {1,2}, r in {1,2,3}",
                 [](std::uint64_t seed) {
                   Rng rng(seed);
                   const int k = rng.between(1, 2);
                   const int r = rng.between(1, 3);
                   const std::uint64_t s = rng.next();
                   const BipartiteMultiGraph b = planted_bipartite_multigraph(k, r, s);
                   return TrialOutcome{check::multiedges(b, k, r, disjoint_multiedges(b, k, r)), false,
                                       "planted_bipartite_multigraph(" + std::to_string(k) + "," + std::to_string(r) + "," +
                                           std::to_string(s) + ")"};
                 }});

  out.push_back({"big_degec", "K_{2kr+1} plus up to 3 random extra vertices, relabelled; (k,r) in {(1,1),(1,2),(1,3),(2,2)}",
                 [](std::uint64_t seed) {
                   Rng rng(seed);
                   // k >= 2 with r = 1 is excluded: K_5 has dgnC = 4 but no two disjoint P_3.
                   static constexpr std::pair<int, int> params[] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}};
                   const auto [k, r] = params[rng.below(4)];
                   const int core = 2 * k * r + 1;
                   const int extra = rng.between(0, 3);
                   std::vector<Edge> edges = complete_graph(core).edges();
                   for (int v = core; v < core + extra; ++v) {
                     for (int u = 0; u < v; ++u) {
                       if (rng.chance(0.4)) edges.emplace_back(u, v);
                     }
                   }
                   const Graph g = relabel(Graph(core + extra, edges), rng.permutation(core + extra));
                   const auto ms = extract_k2r_from_degeneracy(g, k, r);
                   return TrialOutcome{check::models(ms, g, complete_bipartite(2, r), k), false,
                                       g6(g) + " k=" + std::to_string(k) + " r=" + std::to_string(r)};
                 }});

  out.push_back({"pw2_xi", "random pathwidth-2 graph, n in [1,9]", [](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph h = random_pw2(rng.between(1, 9), rng.next()).graph;
                   const MinorModel m = check_pw2_minor_of_xi(h);
                   return TrialOutcome{check::models({m}, xi_graph(h.n()), h, 1), false, g6(h)};
                 }});

  out.push_back({"twk2r", "G(n,p), n in [1,12], p in [0.1,0.6], r in {2,3}; graphs with a K_{2,r} minor are vacuous; bound tw <= 2r-2",
                 [](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph g = detail::random_graph(rng, 1, 12, 0.1, 0.6);
                   const int r = rng.between(2, 3);
                   TrialOutcome t{Verdict::pass(), false, g6(g) + " r=" + std::to_string(r)};
                   if (is_minor(g, complete_bipartite(2, r))) {
                     t.vacuous = true;
                     return t;
                   }
                   const int tw = treewidth_exact(g).width;
                   if (tw > 2 * r - 2) t.verdict = Verdict::fail("treewidth", "tw = " + std::to_string(tw));
                   return t;
                 }});

  out.push_back({"mesh_tiny", "G(n,p), n in [5,8], p in [0.4,0.8], 1 <= q <= p <= 3; tw < p+q-1 is vacuous",
                 [](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph g = detail::random_graph(rng, 5, 8, 0.4, 0.8);
                   const int p = rng.between(1, 3);
                   const int q = rng.between(1, p);
                   TrialOutcome t{Verdict::pass(), false, g6(g) + " p=" + std::to_string(p) + " q=" + std::to_string(q)};
                   if (treewidth_exact(g).width < p + q - 1) {
                     t.vacuous = true;
                     return t;
                   }
                   const auto w = find_mesh(g, q, p);
                   if (!w) {
                     t.verdict = Verdict::fail("existence", "no q-mesh of order p");
                   } else {
                     t.verdict = verify_mesh(g, *w);
                   }
                   return t;
                 }});

  out.push_back({"pack_sep", "G(n,p), n in [6,14], p in [0.2,0.45], h in {K3, K2,3}; pack 0 must give the trivial separation",
                 [](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph g = detail::random_graph(rng, 6, 14, 0.2, 0.45);
                   const int which = rng.between(0, 1);
                   const Graph h = detail::pattern(which);
                   TrialOutcome t{Verdict::pass(), false, g6(g) + " h=" + detail::pattern_name(which)};
                   const WidthResult tw = treewidth_exact(g);
                   const NiceTreeDecomposition ntd = make_nice(g, tw.decomposition);
                   const BalancedSeparation bs = balanced_separation(g, h, ntd);
                   if (bs.pack == 0) {
                     if (!bs.pack_zero || bs.separation.a.size() != g.n() || bs.separation.b.size() != g.n()) {
                       t.verdict = Verdict::fail("pack zero", "expected the trivial separation");
                     }
                     return t;
                   }
                   if (bs.pack != pack_exact(g, h).value) {
                     t.verdict = Verdict::fail("pack", "reported pack disagrees with pack_exact");
                     return t;
                   }
                   t.verdict = check::balanced(g, h, tw.width, bs);
                   return t;
                 }});

  out.push_back({"sep_ep", "G(n,p), n in [6,13], p in [0.2,0.45], h in {K3, K2,3}; recursive hitting set vs exact cover",
                 [impl](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph g = detail::random_graph(rng, 6, 13, 0.2, 0.45);
                   const int which = rng.between(0, 1);
                   const Graph h = detail::pattern(which);
                   TrialOutcome t{Verdict::pass(), false, g6(g) + " h=" + detail::pattern_name(which)};
                   const VertexSet c = impl.hitting_set(g, h);
                   if (Verdict v = check::cover(g, h, c); !v) {
                     t.verdict = v;
                   } else if (c.size() < cover_exact(g, h).value) {
                     t.verdict = Verdict::fail("optimum", "cover smaller than the exact cover number");
                   } else if (c.size() < pack_exact(g, h).value) {
                     t.verdict = Verdict::fail("pack", "cover smaller than the packing number");
                   }
                   return t;
                 }});

  out.push_back({"pack_le_cover", "G(n,p), n in [4,13], p in [0.15,0.6], h in {K3, K2,3}", [](std::uint64_t seed) {
                   Rng rng(seed);
                   const Graph g = detail::random_graph(rng, 4, 13, 0.15, 0.6);
                   const int which = rng.between(0, 1);
                   const Graph h = detail::pattern(which);
                   TrialOutcome t{Verdict::pass(), false, g6(g) + " h=" + detail::pattern_name(which)};
                   const PackResult p = pack_exact(g, h);
                   const CoverResult c = cover_exact(g, h);
                   if (Verdict v = check::models(p.models, g, h, p.value); !v) {
                     t.verdict = v;
                   } else if (Verdict w = check::cover(g, h, c.vertices); !w) {
                     t.verdict = w;
                   } else if (c.vertices.size() != c.value) {
                     t.verdict = Verdict::fail("cover", "size disagrees with the value");
                   } else if (p.value > c.value) {
                     t.verdict = Verdict::fail("pack <= cover", std::to_string(p.value) + " > " + std::to_string(c.value));
                   }
                   return t;
                 }});

  out.push_back({"pipelines_th1", "planted paired linkage, k in {1,2}, r in {1,2,3}, (r-1)^2+1 paths per pair, random partner order; Xi_r models",
                 [](std::uint64_t seed) {
                   Rng rng(seed);
                   const int k = rng.between(1, 2);
                   const int r = rng.between(1, 3);
                   const auto order = static_cast<PartnerOrder>(rng.between(0, 2));
                   const std::uint64_t s = rng.next();
                   const PlantedPairs pp = planted_paired_linkage(k, (r - 1) * (r - 1) + 1, s, order);
                   const auto ms = pairs_to_xi_models(pp.graph, pp.pairs, r, k);
                   return TrialOutcome{check::models(ms, pp.graph, xi_graph(r), k), false,
                                       "planted_paired_linkage k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                           " seed=" + std::to_string(s)};
                 }});

  out.push_back({"pipelines_th2", "planted linkage (p = k, q = r) through linkage_to_pairs, or planted pairs directly; K_{2,r} models",
                 [](std::uint64_t seed) {
                   Rng rng(seed);
                   const int k = rng.between(1, 2);
                   const int r = rng.between(1, 3);
                   const std::uint64_t s = rng.next();
                   const std::string tag = " k=" + std::to_string(k) + " r=" + std::to_string(r) + " seed=" + std::to_string(s);
                   if (rng.chance(0.5) && k * r <= 3) {
                     const PlantedLinkage pl = planted_linkage(k, r, s);
                     const PairedLinkage pairs = linkage_to_pairs(pl.graph, pl.linkage, k, r);
                     const auto ms = pairs_to_k2r_models(pl.graph, pairs, r, k);
                     return TrialOutcome{check::models(ms, pl.graph, complete_bipartite(2, r), k), false, "planted_linkage" + tag};
                   }
                   const PlantedPairs pp = planted_paired_linkage(k, r, s);
                   const auto ms = pairs_to_k2r_models(pp.graph, pp.pairs, r, k);
                   return TrialOutcome{check::models(ms, pp.graph, complete_bipartite(2, r), k), false, "planted_paired_linkage" + tag};
                 }});
  return out;
}

inline std::vector<std::string> lemma_ids() {
  std::vector<std::string> ids;
  for (const Lemma& l : lemmas()) ids.push_back(l.id);
  return ids;
}

inline const Lemma& find_lemma(const std::vector<Lemma>& all, const std::string& id) {
  for (const Lemma& l : all) {
    if (l.id == id) return l;
  }
  throw ParameterError("unknown lemma id: " + id);
}

/// One trial, exceptions included: a library error on an instance inside the lemma's
/// hypothesis is a failure, reported under the clause "exception".
inline TrialOutcome run_trial(const Lemma& lemma, std::uint64_t trial_seed) {
  try {
    return lemma.trial(trial_seed);
  } catch (const std::exception& e) {
    return TrialOutcome{Verdict::fail("exception", e.what()), false, ""};
  }
}

inline std::uint64_t trial_seed(std::uint64_t suite_seed, const std::string& lemma, int trial) {
  return derive_seed(suite_seed, lemma, static_cast<std::uint64_t>(trial));
}

/// Runs `trials` trials; each trial's seed depends only on (seed, lemma id, index) and the
/// outcomes are merged in index order, so the report does not depend on `threads`.
inline VerificationReport run_lemma(const Lemma& lemma, std::uint64_t seed, int trials, int threads = 1) {
  if (trials < 0) throw ParameterError("run_lemma: negative trial count");
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  std::vector<double> times(static_cast<std::size_t>(trials), 0.0);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < trials; i = next++) {
      const auto start = std::chrono::steady_clock::now();
      outcomes[i] = run_trial(lemma, trial_seed(seed, lemma.id, i));
      times[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const auto start = std::chrono::steady_clock::now();
  const int workers = std::clamp(threads, 1, std::max(1, trials));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  VerificationReport report;
  report.lemma = lemma.id;
  report.distribution = lemma.distribution;
  report.trials = trials;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (int i = 0; i < trials; ++i) {
    report.worst_trial = std::max(report.worst_trial, times[i]);
    const TrialOutcome& o = outcomes[i];
    if (o.vacuous) ++report.vacuous;
    if (!o.verdict) report.failures.push_back({i, trial_seed(seed, lemma.id, i), o.verdict.clause, o.verdict.detail, o.instance});
  }
  return report;
}

/// Every lemma in `ids` (all of them when empty), in suite order.
inline std::vector<VerificationReport> run_verification_suite(std::uint64_t seed, int trials, const std::vector<std::string>& ids = {},
                                                              int threads = 1, const Implementations& impl = {}) {
  const std::vector<Lemma> all = lemmas(impl);
  for (const std::string& id : ids) find_lemma(all, id);
  std::vector<VerificationReport> out;
  for (const Lemma& l : all) {
    if (ids.empty() || std::find(ids.begin(), ids.end(), l.id) != ids.end()) out.push_back(run_lemma(l, seed, trials, threads));
  }
  return out;
}

/// Replays one recorded failure: same lemma, same trial seed.
inline TrialOutcome replay(const std::string& lemma, std::uint64_t trial_seed, const Implementations& impl = {}) {
  const std::vector<Lemma> all = lemmas(impl);
  return run_trial(find_lemma(all, lemma), trial_seed);
}

/// Deterministic part of a report: no timings.
inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"clause", f.clause}, {"detail", f.detail}, {"instance", f.instance}});
  }
  return {{"lemma", r.lemma},   {"distribution", r.distribution}, {"trials", r.trials},
          {"vacuous", r.vacuous}, {"failures", r.failures.size()},   {"failure_records", failures}};
}

inline nlohmann::json to_json(const std::vector<VerificationReport>& rs, std::uint64_t seed) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : rs) reports.push_back(to_json(r));
  return {{"seed", seed}, {"reports", reports}};
}

inline nlohmann::json timing_json(const VerificationReport& r) {
  return {{"lemma", r.lemma}, {"seconds", r.seconds}, {"worst_trial_seconds", r.worst_trial}};
}

}  // namespace epgap::harness
