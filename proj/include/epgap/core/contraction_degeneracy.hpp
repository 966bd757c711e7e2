#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "epgap/core/contraction.hpp"
#include "epgap/core/degeneracy.hpp"
#include "epgap/core/limits.hpp"

namespace epgap {

enum class DegeneracyMode { exact, lower_bound };

/// dgnC value together with a minor attaining it (branch sets in the input graph).
struct ContractionDegeneracy {
  int value = 0;
  Minor witness;
};

namespace detail {

/// Minor state: pairwise disjoint connected groups of original vertices, sorted by mask.
using GroupState = std::vector<Mask>;

inline std::vector<int> group_degrees(const std::vector<Mask>& adj, const GroupState& groups) {
  std::vector<Mask> reach(groups.size(), 0);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for_each_bit(groups[i], [&](int v) { reach[i] |= adj[v]; });
  }
  std::vector<int> deg(groups.size(), 0);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (i != j && (reach[i] & groups[j]) != 0) ++deg[i];
    }
  }
  return deg;
}

inline Minor state_to_minor(const Graph& g, const GroupState& groups) {
  std::vector<VertexSet> sets;
  sets.reserve(groups.size());
  for (Mask m : groups) sets.push_back(VertexSet::from_mask(g.n(), m));
  return quotient(g, std::move(sets));
}

/// Searches for a minor with minimum degree >= d. A vertex of degree < d cannot survive
/// as a singleton branch set, so it is either deleted or merged into a neighbour; this
/// branching is complete. Failing states are memoised.
class MinDegreeMinorSearch {
 public:
  MinDegreeMinorSearch(const Graph& g, int d) : adj_(g.adjacency_masks()), d_(d) {}

  std::optional<GroupState> run(GroupState start) {
    std::sort(start.begin(), start.end());
    if (dfs(start)) return found_;
    return std::nullopt;
  }

 private:
  bool dfs(const GroupState& groups) {
    if (static_cast<int>(groups.size()) < d_ + 1) return false;
    if (failed_.contains(groups)) return false;
    const std::vector<int> deg = group_degrees(adj_, groups);
    int low = -1;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (deg[i] < d_ && (low < 0 || deg[i] < deg[low])) low = static_cast<int>(i);
    }
    if (low < 0) {
      found_ = groups;
      return true;
    }
    {
      GroupState next = groups;
      next.erase(next.begin() + low);
      if (dfs(next)) return true;
    }
    Mask reach = 0;
    for_each_bit(groups[low], [&](int v) { reach |= adj_[v]; });
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (static_cast<int>(j) == low || (reach & groups[j]) == 0) continue;
      GroupState next;
      next.reserve(groups.size() - 1);
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (static_cast<int>(i) == low) continue;
        next.push_back(i == j ? (groups[i] | groups[low]) : groups[i]);
      }
      std::sort(next.begin(), next.end());
      if (dfs(next)) return true;
    }
    failed_.insert(groups);
    return false;
  }

  std::vector<Mask> adj_;
  int d_;
  std::set<GroupState> failed_;
  GroupState found_;
};

inline GroupState singleton_state(int n) {
  GroupState s;
  for (int v = 0; v < n; ++v) s.push_back(bit(v));
  return s;
}

/// Greedy contraction lower bound: repeatedly take a minimum-degree vertex and contract it
/// into the neighbour sharing the fewest common neighbours (isolated vertices are deleted),
/// remembering the best minimum degree seen.
inline ContractionDegeneracy greedy_contraction_bound(const Graph& g) {
  const std::vector<Mask> adj = g.adjacency_masks();
  GroupState groups = singleton_state(g.n());
  ContractionDegeneracy best{0, state_to_minor(g, groups)};
  while (groups.size() > 1) {
    const std::vector<int> deg = group_degrees(adj, groups);
    int low = 0;
    for (std::size_t i = 1; i < groups.size(); ++i) {
      if (deg[i] < deg[low]) low = static_cast<int>(i);
    }
    if (deg[low] > best.value) best = {deg[low], state_to_minor(g, groups)};
    std::vector<Mask> reach(groups.size(), 0);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for_each_bit(groups[i], [&](int v) { reach[i] |= adj[v]; });
    }
    int partner = -1;
    int partner_common = 0;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (static_cast<int>(j) == low || (reach[low] & groups[j]) == 0) continue;
      int common = 0;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i != j && static_cast<int>(i) != low && (reach[low] & groups[i]) != 0 &&
            (reach[j] & groups[i]) != 0) {
          ++common;
        }
      }
      if (partner < 0 || common < partner_common) {
        partner = static_cast<int>(j);
        partner_common = common;
      }
    }
    GroupState next;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (static_cast<int>(i) == low) continue;
      next.push_back(static_cast<int>(i) == partner ? (groups[i] | groups[low]) : groups[i]);
    }
    std::sort(next.begin(), next.end());
    groups = std::move(next);
  }
  return best;
}

}  // namespace detail

/// Exact search for a minor of g with minimum degree at least d.
inline std::optional<Minor> minor_with_min_degree(const Graph& g, int d, const Limits& limits = {}) {
  require_size(g.n(), limits.contraction_degeneracy, "minor_with_min_degree");
  if (d <= 0) {
    if (g.n() == 0) return std::nullopt;
    return detail::state_to_minor(g, {bit(0)});
  }
  detail::MinDegreeMinorSearch search(g, d);
  auto state = search.run(detail::singleton_state(g.n()));
  if (!state) return std::nullopt;
  return detail::state_to_minor(g, *state);
}

/// dgnC(G): maximum minimum degree over all minors. Exact mode is limited to
/// limits.contraction_degeneracy vertices; lower_bound mode returns the best of the
/// degeneracy and a greedy contraction sequence, never above the exact value.
inline ContractionDegeneracy contraction_degeneracy_witness(const Graph& g, DegeneracyMode mode,
                                                            const Limits& limits = {}) {
  if (mode == DegeneracyMode::exact) require_size(g.n(), limits.contraction_degeneracy, "contraction_degeneracy");
  if (g.n() == 0) return {0, Minor{}};
  if (g.n() > 64) throw SizeLimitError("contraction_degeneracy: n exceeds 64");
  const DegeneracyWitness dgn = degeneracy(g);
  std::vector<VertexSet> core;
  for (std::size_t i = static_cast<std::size_t>(dgn.witness_prefix); i < dgn.elimination_order.size(); ++i) {
    core.push_back(VertexSet(g.n(), {dgn.elimination_order[i]}));
  }
  ContractionDegeneracy best{dgn.value, quotient(g, std::move(core))};
  ContractionDegeneracy greedy = detail::greedy_contraction_bound(g);
  if (greedy.value > best.value) best = std::move(greedy);
  if (mode == DegeneracyMode::lower_bound) return best;
  for (int d = best.value + 1;; ++d) {
    auto minor = minor_with_min_degree(g, d, limits);
    if (!minor) break;
    best = {minor->graph.min_degree(), std::move(*minor)};
    d = best.value;
  }
  return best;
}

inline int contraction_degeneracy(const Graph& g, DegeneracyMode mode = DegeneracyMode::exact,
                                  const Limits& limits = {}) {
  return contraction_degeneracy_witness(g, mode, limits).value;
}

}  // namespace epgap
