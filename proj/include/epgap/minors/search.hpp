#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <limits>
#include <optional>
#include <vector>

#include "epgap/core/limits.hpp"
#include "epgap/core/mask_graph.hpp"
#include "epgap/minors/minor_model.hpp"

namespace epgap {

namespace detail {

/// Branch-and-bound search for a minor model with branch sets confined to an allowed
/// host vertex mask.
///
/// Pattern vertices are placed one at a time, most-constrained first. A pattern vertex
/// with already placed neighbours receives a connected set of unused host vertices that
/// touches every placed neighbour's branch set; the sets are enumerated by the standard
/// extension-set scheme, anchored at their smallest vertex inside the first neighbour's
/// boundary, so each candidate is produced once and host vertices are tried in ascending
/// id order. Pruning after each placement:
///   - every placed vertex keeps at least as many free boundary vertices as it has
///     unplaced pattern neighbours;
///   - every connected piece of the unplaced pattern fits into some component of the
///     free host graph that touches all of its placed neighbours.
/// Pattern twins (equal neighbourhoods) are interchangeable, so their branch sets are
/// forced into increasing order of smallest vertex.
class MinorSearchEngine {
 public:
  MinorSearchEngine(const Graph& host, const Graph& pattern)
      : h_(pattern.n()), hadj_(host.adjacency_masks()), padj_(pattern.adjacency_masks()) {
    plan(pattern);
  }

  /// Branch sets (as masks) of a model inside `allowed`, or nothing.
  std::optional<std::vector<Mask>> find(Mask allowed) {
    if (h_ == 0) return std::vector<Mask>{};
    if (popcount(allowed) < h_) return std::nullopt;
    if (pattern_edges_ > 0) {
      int host_edges = 0;
      for_each_bit(allowed, [&](int v) { host_edges += popcount(hadj_[v] & allowed); });
      if (host_edges / 2 < pattern_edges_) return std::nullopt;
    }
    allowed_ = allowed;
    const int full = popcount(allowed);
    // Small branch sets first: cheap restricted passes find most positive instances.
    for (int cap : {1, 3, full}) {
      cap_ = std::min(cap, full);
      bs_.assign(static_cast<std::size_t>(h_), 0);
      reach_.assign(static_cast<std::size_t>(h_), 0);
      used_ = 0;
      if (place(0)) return bs_;
      if (cap_ == full) break;
    }
    return std::nullopt;
  }

 private:
  struct FuturePiece {
    Mask members = 0;
    Mask placed_neighbors = 0;
    int size = 0;
  };

  void plan(const Graph& pattern) {
    pattern_edges_ = pattern.m();
    std::vector<bool> placed(static_cast<std::size_t>(h_), false);
    Mask placed_mask = 0;
    for (int step = 0; step < h_; ++step) {
      int best = -1;
      int best_placed = -1;
      for (int p = 0; p < h_; ++p) {
        if (placed[p]) continue;
        const int k = popcount(padj_[p] & placed_mask);
        if (best < 0 || k > best_placed ||
            (k == best_placed && pattern.degree(p) > pattern.degree(best))) {
          best = p;
          best_placed = k;
        }
      }
      placed[best] = true;
      placed_mask |= bit(best);
      order_.push_back(best);
    }
    placed_before_.assign(static_cast<std::size_t>(h_), 0);
    Mask prefix = 0;
    for (int i = 0; i < h_; ++i) {
      placed_before_[i] = padj_[order_[i]] & prefix;
      prefix |= bit(order_[i]);
    }
    twin_before_.assign(static_cast<std::size_t>(h_), -1);
    for (int i = 0; i < h_; ++i) {
      const int p = order_[i];
      for (int j = i - 1; j >= 0; --j) {
        const int q = order_[j];
        if ((padj_[p] & ~bit(q)) == (padj_[q] & ~bit(p))) {
          twin_before_[p] = q;
          break;
        }
      }
    }
    future_.assign(static_cast<std::size_t>(h_), {});
    open_.assign(static_cast<std::size_t>(h_), {});
    prefix = 0;
    for (int i = 0; i < h_; ++i) {
      prefix |= bit(order_[i]);
      const Mask rest = ((h_ == 64 ? ~Mask{0} : (bit(h_) - 1))) & ~prefix;
      for (Mask piece : mask_components(padj_, rest)) {
        FuturePiece f;
        f.members = piece;
        f.size = popcount(piece);
        for_each_bit(piece, [&](int r) { f.placed_neighbors |= padj_[r] & prefix; });
        future_[i].push_back(f);
      }
      for_each_bit(prefix, [&](int p) {
        const int k = popcount(padj_[p] & rest);
        if (k > 0) open_[i].push_back({p, k});
      });
    }
  }

  bool place(int level) {
    if (level == h_) return true;
    const int p = order_[level];
    const Mask free = allowed_ & ~used_;
    const int room = popcount(free) - (h_ - level - 1);
    if (room <= 0) return false;
    const int cap = std::min(cap_, room);
    const Mask need = placed_before_[level];
    if (need == 0) {
      int floor_vertex = -1;
      if (twin_before_[p] >= 0) floor_vertex = lowest_bit(bs_[twin_before_[p]]);
      Mask anchors = free;
      while (anchors != 0) {
        const int a = lowest_bit(anchors);
        anchors &= anchors - 1;
        if (a <= floor_vertex) continue;
        const Mask below = bit(a) - 1;
        if (grow(level, p, cap, bit(a), hadj_[a] & free & ~below, below)) return true;
      }
      return false;
    }
    // Anchor inside the boundary of the placed neighbour with the tightest boundary.
    int pivot = -1;
    Mask pivot_boundary = 0;
    for_each_bit(need, [&](int q) {
      const Mask b = reach_[q] & free;
      if (pivot < 0 || popcount(b) < popcount(pivot_boundary)) {
        pivot = q;
        pivot_boundary = b;
      }
    });
    Mask anchors = pivot_boundary;
    while (anchors != 0) {
      const int a = lowest_bit(anchors);
      anchors &= anchors - 1;
      const Mask excluded = pivot_boundary & (bit(a) - 1);
      if (grow(level, p, cap, bit(a), hadj_[a] & free & ~excluded, excluded)) return true;
    }
    return false;
  }

  bool grow(int level, int p, int cap, Mask set, Mask ext, Mask excluded) {
    if (accept(level, p, set)) return true;
    if (popcount(set) >= cap) return false;
    const Mask free = allowed_ & ~used_;
    while (ext != 0) {
      const int v = lowest_bit(ext);
      ext &= ext - 1;
      const Mask grown = set | bit(v);
      const Mask next_ext = (ext | (hadj_[v] & free)) & ~grown & ~excluded;
      if (grow(level, p, cap, grown, next_ext, excluded)) return true;
      excluded |= bit(v);
    }
    return false;
  }

  bool accept(int level, int p, Mask set) {
    const Mask reach = reach_of(hadj_, set);
    bool touches_all = true;
    for_each_bit(placed_before_[level], [&](int q) {
      if ((reach & bs_[q]) == 0) touches_all = false;
    });
    if (!touches_all) return false;
    if (twin_before_[p] >= 0 && lowest_bit(set) < lowest_bit(bs_[twin_before_[p]])) return false;
    bs_[p] = set;
    reach_[p] = reach;
    used_ |= set;
    const bool ok = feasible(level) && place(level + 1);
    if (!ok) {
      used_ &= ~set;
      bs_[p] = 0;
      reach_[p] = 0;
    }
    return ok;
  }

  bool feasible(int level) const {
    const Mask free = allowed_ & ~used_;
    for (const auto& [q, count] : open_[level]) {
      if (popcount(reach_[q] & free) < count) return false;
    }
    if (future_[level].empty()) return true;
    const std::vector<Mask> pieces = mask_components(hadj_, free);
    int total = 0;
    for (const FuturePiece& f : future_[level]) {
      total += f.size;
      bool fits = false;
      for (Mask c : pieces) {
        if (popcount(c) < f.size) continue;
        bool touches = true;
        for_each_bit(f.placed_neighbors, [&](int q) {
          if ((reach_[q] & c) == 0) touches = false;
        });
        if (touches) {
          fits = true;
          break;
        }
      }
      if (!fits) return false;
    }
    return total <= popcount(free);
  }

  int h_;
  int pattern_edges_ = 0;
  std::vector<Mask> hadj_;
  std::vector<Mask> padj_;
  std::vector<int> order_;
  std::vector<Mask> placed_before_;
  std::vector<int> twin_before_;
  std::vector<std::vector<FuturePiece>> future_;
  std::vector<std::vector<std::pair<int, int>>> open_;

  std::vector<Mask> bs_;
  std::vector<Mask> reach_;
  Mask used_ = 0;
  Mask allowed_ = 0;
  int cap_ = 0;
};

inline bool is_triangle(const Graph& g) { return g.n() == 3 && g.m() == 3; }

/// Chordless cycle inside `allowed`, or nothing when g[allowed] is a forest.
inline std::optional<std::vector<int>> chordless_cycle(const std::vector<Mask>& adj, Mask allowed) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<int> cycle;
  for (int root = 0; root < n && cycle.empty(); ++root) {
    if (!((allowed >> root) & 1U) || parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<std::pair<int, Mask>> stack{{root, adj[root] & allowed}};
    while (!stack.empty() && cycle.empty()) {
      auto& [v, pending] = stack.back();
      if (pending == 0) {
        stack.pop_back();
        continue;
      }
      const int u = lowest_bit(pending);
      pending &= pending - 1;
      if (u == parent[v]) continue;
      if (parent[u] != -2) {
        if (depth[u] < depth[v]) {
          for (int w = v; w != u; w = parent[w]) cycle.push_back(w);
          cycle.push_back(u);
        }
        continue;
      }
      parent[u] = v;
      depth[u] = depth[v] + 1;
      stack.push_back({u, adj[u] & allowed});
    }
  }
  if (cycle.empty()) return std::nullopt;
  // Shortcut chords until none remain.
  bool changed = true;
  while (changed) {
    changed = false;
    const int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len && !changed; ++i) {
      for (int j = i + 2; j < len && !changed; ++j) {
        if (i == 0 && j == len - 1) continue;
        if ((adj[cycle[i]] >> cycle[j]) & 1U) {
          std::vector<int> shorter(cycle.begin() + i, cycle.begin() + j + 1);
          cycle = std::move(shorter);
          changed = true;
        }
      }
    }
  }
  return cycle;
}

inline std::optional<std::vector<Mask>> find_masks(const Graph& host, const Graph& pattern, Mask allowed) {
  if (is_triangle(pattern)) {
    auto cycle = chordless_cycle(host.adjacency_masks(), allowed);
    if (!cycle) return std::nullopt;
    Mask rest = 0;
    for (std::size_t i = 2; i < cycle->size(); ++i) rest |= bit((*cycle)[i]);
    return std::vector<Mask>{bit((*cycle)[0]), bit((*cycle)[1]), rest};
  }
  MinorSearchEngine engine(host, pattern);
  return engine.find(allowed);
}

inline Mask union_of(const std::vector<Mask>& masks) {
  Mask u = 0;
  for (Mask b : masks) u |= b;
  return u;
}

/// Ascending single pass: drop v whenever the pattern survives without it.
inline std::vector<Mask> minimize_masks(const Graph& host, const Graph& pattern, std::vector<Mask> masks) {
  Mask support = union_of(masks);
  for (int v = 0; v < host.n(); ++v) {
    if (!((support >> v) & 1U)) continue;
    auto smaller = find_masks(host, pattern, support & ~bit(v));
    if (smaller) {
      masks = std::move(*smaller);
      support = union_of(masks);
    }
  }
  return masks;
}

/// Branch sets of every minimal model inside `allowed`, one per support, sorted by support.
inline std::vector<std::vector<Mask>> enumerate_supports(const Graph& host, const Graph& pattern, Mask allowed,
                                                         int limit, bool* truncated) {
  std::map<Mask, std::vector<Mask>> by_support;
  std::set<Mask> visited;
  std::vector<Mask> dead;  // excluded sets known to leave no model
  bool stop = false;
  std::function<void(Mask)> visit = [&](Mask excluded) {
    if (stop || !visited.insert(excluded).second) return;
    for (Mask d : dead) {
      if ((d & ~excluded) == 0) return;
    }
    auto masks = find_masks(host, pattern, allowed & ~excluded);
    if (!masks) {
      dead.push_back(excluded);
      return;
    }
    std::vector<Mask> minimal = minimize_masks(host, pattern, std::move(*masks));
    const Mask support = union_of(minimal);
    if (!by_support.contains(support)) {
      if (static_cast<int>(by_support.size()) >= limit) {
        stop = true;
        if (truncated) *truncated = true;
        return;
      }
      by_support.emplace(support, minimal);
    }
    for_each_bit(support, [&](int v) { visit(excluded | bit(v)); });
  };
  visit(0);
  std::vector<std::vector<Mask>> out;
  for (auto& [support, masks] : by_support) out.push_back(std::move(masks));
  return out;
}

inline MinorModel model_from_masks(const Graph& host, const Graph& pattern, const std::vector<Mask>& masks) {
  MinorModel m{pattern, host, {}};
  for (Mask b : masks) m.branch_sets.push_back(VertexSet::from_mask(host.n(), b));
  return m;
}

inline void check_minor_limits(const Graph& host, const Graph& pattern, const Limits& limits) {
  if (is_triangle(pattern)) {
    require_size(host.n(), 64, "minor search host");
    return;
  }
  require_size(pattern.n(), limits.minor_pattern, "minor search pattern");
  require_size(host.n(), limits.minor_host, "minor search host");
}

}  // namespace detail

/// A model of `pattern` in `host` with branch sets inside `allowed`, if one exists.
inline std::optional<MinorModel> find_minor_model_within(const Graph& host, const Graph& pattern,
                                                         const VertexSet& allowed, const Limits& limits = {}) {
  detail::check_minor_limits(host, pattern, limits);
  auto masks = detail::find_masks(host, pattern, allowed.to_mask());
  if (!masks) return std::nullopt;
  return detail::model_from_masks(host, pattern, *masks);
}

/// A model of `pattern` in `host` if pattern is a minor of host. Deterministic: host
/// vertices are explored in ascending id order.
inline std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& pattern, const Limits& limits = {}) {
  return find_minor_model_within(host, pattern, host.all(), limits);
}

inline bool is_minor(const Graph& host, const Graph& pattern, const Limits& limits = {}) {
  return find_minor_model(host, pattern, limits).has_value();
}

/// Shrinks a model until its support is inclusion-minimal: no proper subset of the
/// support carries any model of the pattern. One ascending pass suffices because minor
/// containment is monotone under taking induced subgraphs.
inline MinorModel minimize_model(const MinorModel& model, const Limits& limits = {}) {
  detail::check_minor_limits(model.host, model.pattern, limits);
  std::vector<Mask> masks;
  for (const auto& b : model.branch_sets) masks.push_back(b.to_mask());
  return detail::model_from_masks(model.host, model.pattern, detail::minimize_masks(model.host, model.pattern, masks));
}

struct ModelEnumeration {
  std::vector<MinorModel> models;
  bool truncated = false;
};

/// All support-minimal models of `pattern` in `host`, one per support, sorted by support.
/// A minimal support S missed so far avoids some vertex of every support found, so
/// branching on "exclude v" for each v of a found support reaches it (Lawler's scheme).
/// Stops after `limit` supports and sets `truncated`.
inline ModelEnumeration enumerate_minimal_models(const Graph& host, const Graph& pattern, int limit,
                                                 const Limits& limits = {}) {
  detail::check_minor_limits(host, pattern, limits);
  ModelEnumeration out;
  const auto found = detail::enumerate_supports(host, pattern, detail::full_mask(host.n()), limit, &out.truncated);
  for (const auto& masks : found) out.models.push_back(detail::model_from_masks(host, pattern, masks));
  return out;
}

}  // namespace epgap
