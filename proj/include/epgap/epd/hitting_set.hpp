#pragma once

#include <vector>

#include "epgap/epd/separation.hpp"
#include "epgap/width/treewidth.hpp"

namespace epgap {

struct RecursionStep {
  int depth = 0;
  int vertices = 0;
  int pack = 0;
  int width = -1;
  int separator = 0;  // |A ∩ B|
  int left = 0;       // |A - B|
  int right = 0;      // |B - A|
  bool over_budget = false;
};

struct HittingSetRun {
  VertexSet cover;
  std::vector<RecursionStep> trace;
};

namespace detail {

class HittingSetRecursion {
 public:
  HittingSetRecursion(const Graph& g, const Graph& h, int budget, const Limits& limits)
      : g_(g), oracle_(g, h, limits), budget_(budget), limits_(limits) {}

  HittingSetRun run() {
    HittingSetRun out{VertexSet(g_.n()), {}};
    solve(g_.all(), 0, out);
    return out;
  }

 private:
  void solve(const VertexSet& part, int depth, HittingSetRun& out) {
    RecursionStep step{depth, part.size(), oracle_.pack(part), -1, 0, 0, 0, false};
    if (step.pack == 0) {
      out.trace.push_back(step);
      return;
    }
    const Subgraph sub = induced_subgraph(g_, part);
    const WidthResult tw = treewidth_exact(sub.graph, limits_);
    const NiceTreeDecomposition ntd = make_nice(sub.graph, tw.decomposition);
    const BalancedSeparation bs = balanced_separation_with(
        sub.graph, ntd, [&](const VertexSet& s) { return oracle_.pack(lift(sub, s, g_.n())); });
    const VertexSet a = lift(sub, bs.separation.a, g_.n());
    const VertexSet b = lift(sub, bs.separation.b, g_.n());
    step.width = tw.width;
    step.separator = (a & b).size();
    step.left = (a - b).size();
    step.right = (b - a).size();
    step.over_budget = budget_ >= 0 && step.separator > budget_;
    out.trace.push_back(step);
    out.cover |= a & b;
    solve(a - b, depth + 1, out);
    solve(b - a, depth + 1, out);
  }

  const Graph& g_;
  PackingOracle oracle_;
  int budget_;
  Limits limits_;
};

}  // namespace detail

/// H-hitting set by recursive balanced separation: a part with pack 0 needs nothing,
/// otherwise take the separator of an optimal nice decomposition, keep A ∩ B and recurse
/// on G[A - B] and G[B - A]. A connected model avoiding A ∩ B lies inside one side, so
/// the union is a hitting set. Steps whose separator exceeds `width_budget` (when >= 0)
/// are flagged in the trace.
inline HittingSetRun hitting_set_recursive(const Graph& g, const Graph& h, int width_budget = -1,
                                           const Limits& limits = {}) {
  if (!is_connected(h)) throw PreconditionError("hitting_set_recursive: pattern must be connected");
  detail::HittingSetRecursion rec(g, h, width_budget, limits);
  HittingSetRun out = rec.run();
  if (detail::find_masks(g, h, detail::full_mask(g.n()) & ~out.cover.to_mask())) {
    throw WitnessError("hitting_set_recursive: a model survives the deletion");
  }
  return out;
}

}  // namespace epgap
