#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epgap/epd/bounds.hpp"
#include "epgap/epd/hitting_set.hpp"
#include "epgap/width/pathwidth.hpp"

namespace epgap {

enum class CertificateKind { packing, cover };

inline const char* to_string(CertificateKind k) { return k == CertificateKind::packing ? "packing" : "cover"; }

/// Either k disjoint models of H or a vertex set whose deletion leaves no model.
struct Certificate {
  CertificateKind kind = CertificateKind::cover;
  int k = 0;
  std::vector<MinorModel> models;
  VertexSet cover;
  int pack = 0;                  // pack_h(G)
  int treewidth = -1;            // -1 when not computed
  std::optional<BigInt> bound;   // g(k) of the applicable theorem, if any
  std::string bound_name;        // "th1", "th2" or empty
  std::vector<RecursionStep> trace;
};

/// Clauses: "packing size", "model", "disjointness", "cover".
inline Verdict verify_certificate(const Graph& g, const Graph& h, const Certificate& c) {
  if (c.kind == CertificateKind::packing) {
    if (static_cast<int>(c.models.size()) < c.k) return Verdict::fail("packing size", "fewer than k models");
    for (const auto& m : c.models) {
      if (!(m.host == g) || !(m.pattern == h)) return Verdict::fail("model", "model of another pattern or host");
      if (Verdict v = verify_model(m); !v) return Verdict::fail("model", v.clause + ": " + v.detail);
    }
    if (!pairwise_disjoint(c.models)) return Verdict::fail("disjointness", "models overlap");
    return Verdict::pass();
  }
  if (c.cover.universe() != g.n()) return Verdict::fail("cover", "cover over the wrong universe");
  if (detail::find_masks(g, h, detail::full_mask(g.n()) & ~c.cover.to_mask())) {
    return Verdict::fail("cover", "a model survives the deletion");
  }
  return Verdict::pass();
}

namespace detail {

/// K_{2,r} up to isomorphism, returning r (0 otherwise).
inline int k2r_parameter(const Graph& h) {
  const int r = h.n() - 2;
  if (r < 1 || h.m() != 2 * r) return 0;
  std::vector<int> hubs;
  for (int v = 0; v < h.n(); ++v) {
    if (h.degree(v) == r) hubs.push_back(v);
  }
  if (r == 2) {
    // K_{2,2} = C_4: every vertex a hub.
    return hubs.size() == 4 && is_connected(h) ? 2 : 0;
  }
  if (hubs.size() != 2 || h.has_edge(hubs[0], hubs[1])) return 0;
  for (int v = 0; v < h.n(); ++v) {
    if (v == hubs[0] || v == hubs[1]) continue;
    if (!h.has_edge(v, hubs[0]) || !h.has_edge(v, hubs[1])) return 0;
  }
  return r;
}

}  // namespace detail

/// Win/win: k disjoint models when pack_h(G) >= k, otherwise the recursive hitting set.
/// The treewidth test of the theorems (tw >= g(k) forces k·H) is evaluated when an exact
/// treewidth is affordable; at these sizes it always lands in the cover branch.
inline Certificate epgap_winwin(const Graph& g, const Graph& h, int k, const Limits& limits = {}) {
  if (k < 1) throw ParameterError("epgap_winwin: k must be positive");
  if (!is_connected(h)) throw PreconditionError("epgap_winwin: pattern must be connected");
  Certificate c;
  c.k = k;
  if (const int r = detail::k2r_parameter(h); r > 0) {
    c.bound = bound_th2(k, r);
    c.bound_name = "th2";
  } else if (h.n() > 5 && h.n() <= limits.pathwidth && pathwidth_exact(h, limits).width <= 2) {
    c.bound = bound_th1(k, h.n());
    c.bound_name = "th1";
  }
  if (g.n() <= limits.treewidth) c.treewidth = treewidth_exact(g, limits).width;
  const PackResult pack = pack_exact(g, h, limits);
  c.pack = pack.value;
  if (c.bound && c.treewidth >= 0 && BigInt(c.treewidth) >= *c.bound && pack.value < k) {
    throw std::logic_error("epgap_winwin: treewidth above the bound without k disjoint models");
  }
  if (pack.value >= k) {
    c.kind = CertificateKind::packing;
    c.models.assign(pack.models.begin(), pack.models.begin() + k);
    return c;
  }
  c.kind = CertificateKind::cover;
  HittingSetRun run = hitting_set_recursive(g, h, c.bound && *c.bound < 1000000 ? static_cast<int>(*c.bound) : -1, limits);
  c.cover = std::move(run.cover);
  c.trace = std::move(run.trace);
  return c;
}

}  // namespace epgap
