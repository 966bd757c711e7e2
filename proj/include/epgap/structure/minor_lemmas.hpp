#pragma once

#include <algorithm>
#include <vector>

#include "epgap/core/contraction_degeneracy.hpp"
#include "epgap/core/generators.hpp"
#include "epgap/minors/search.hpp"
#include "epgap/structure/partition.hpp"
#include "epgap/width/pathwidth.hpp"

namespace epgap {

/// A model of h in Xi_n (n = |V(h)|) for a graph of pathwidth at most 2, found by the
/// generic minor search (the host is allowed to be 3n vertices).
inline MinorModel check_pw2_minor_of_xi(const Graph& h, const Limits& limits = {}) {
  if (h.n() == 0) throw PreconditionError("check_pw2_minor_of_xi: empty graph");
  const WidthResult pw = pathwidth_exact(h, limits);
  if (pw.width > 2) throw PreconditionError("check_pw2_minor_of_xi: pathwidth " + std::to_string(pw.width) + " > 2");
  Limits wide = limits;
  wide.minor_host = std::max(limits.minor_host, 3 * h.n());
  auto model = find_minor_model(xi_graph(h.n()), h, wide);
  if (!model) throw WitnessError("check_pw2_minor_of_xi: no model found");
  if (Verdict v = verify_model(*model); !v) throw WitnessError("check_pw2_minor_of_xi: " + v.clause);
  return *model;
}

/// k disjoint K_{2,r} models from a graph with contraction degeneracy >= 2kr: take a minor
/// of minimum degree >= 2kr, split it into k parts of minimum degree >= 2r - 1, find
/// K_{2,r} inside each part (treewidth >= 2r - 1 forces it) and lift through the minor.
inline std::vector<MinorModel> extract_k2r_from_degeneracy(const Graph& g, int k, int r, const Limits& limits = {}) {
  if (k < 1 || r < 1) throw ParameterError("extract_k2r_from_degeneracy: k and r must be positive");
  const int need = 2 * k * r;
  std::optional<Minor> minor;
  ContractionDegeneracy greedy = contraction_degeneracy_witness(g, DegeneracyMode::lower_bound, limits);
  if (greedy.value >= need) {
    minor = std::move(greedy.witness);
  } else {
    require_size(g.n(), limits.contraction_degeneracy, "extract_k2r_from_degeneracy");
    minor = minor_with_min_degree(g, need, limits);
  }
  if (!minor) throw PreconditionError("extract_k2r_from_degeneracy: contraction degeneracy below 2kr");
  const Graph& h = minor->graph;
  MinorModel minor_in_g{h, g, minor->branch_sets};
  const Partition parts = stiebitz_partition(h, k);
  const Graph pattern = complete_bipartite(2, r);
  std::vector<MinorModel> out;
  for (const VertexSet& part : parts.parts) {
    const Subgraph sub = induced_subgraph(h, part);
    auto inside = find_minor_model(sub.graph, pattern, limits);
    if (!inside) throw WitnessError("extract_k2r_from_degeneracy: part without a K_{2,r} minor");
    const MinorModel in_minor = lift_model(*inside, sub, h);
    MinorModel in_g = compose(in_minor, minor_in_g);
    if (Verdict v = verify_model(in_g); !v) throw WitnessError("extract_k2r_from_degeneracy: " + v.clause);
    out.push_back(std::move(in_g));
  }
  if (!pairwise_disjoint(out)) throw WitnessError("extract_k2r_from_degeneracy: models overlap");
  return out;
}

}  // namespace epgap
