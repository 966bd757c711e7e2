#pragma once

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "epgap/core/limits.hpp"
#include "epgap/minors/search.hpp"

namespace epgap {

namespace detail {

inline void check_pack_limits(const Graph& g, const Graph& h, const Limits& limits, const char* what) {
  require_size(g.n(), is_triangle(h) ? limits.pack_host_triangle : limits.pack_host, what);
  require_size(h.n(), limits.minor_pattern, what);
}

}  // namespace detail

/// pack_h of induced subgraphs of one host. The minimal supports of G[S] are exactly the
/// minimal supports of G inside S, so they are enumerated once; pack(S) is then a
/// maximum disjoint family among them, memoised on the relevant part of S.
class PackingOracle {
 public:
  PackingOracle(const Graph& g, const Graph& h, const Limits& limits = {}) : g_(g), h_(h) {
    detail::check_pack_limits(g, h, limits, "pack");
    bool truncated = false;
    models_ = detail::enumerate_supports(g, h, detail::full_mask(g.n()), limits.model_enumeration, &truncated);
    if (truncated) throw SizeLimitError("pack: more than " + std::to_string(limits.model_enumeration) + " minimal models");
    for (const auto& m : models_) supports_.push_back(detail::union_of(m));
  }

  const Graph& host() const { return g_; }
  const Graph& pattern() const { return h_; }
  const std::vector<Mask>& supports() const { return supports_; }
  std::size_t cache_size() const { return memo_.size(); }

  int pack(Mask within) { return solve(relevant(within)); }
  int pack(const VertexSet& within) { return pack(within.to_mask()); }

  /// A maximum packing inside `within`, as indices into supports().
  std::vector<int> packing(Mask within) {
    std::vector<int> out;
    Mask s = relevant(within);
    while (s != 0) {
      const int best = solve(s);
      const Mask v = s & (~s + 1);
      const Mask without = relevant(s & ~v);
      if (solve(without) == best) {
        s = without;
        continue;
      }
      for (std::size_t i = 0; i < supports_.size(); ++i) {
        const Mask x = supports_[i];
        if ((x & v) != 0 && (x & ~s) == 0 && 1 + solve(relevant(s & ~x)) == best) {
          out.push_back(static_cast<int>(i));
          s = relevant(s & ~x);
          break;
        }
      }
    }
    return out;
  }

  MinorModel model(int index) const { return detail::model_from_masks(g_, h_, models_[index]); }

 private:
  /// Vertices of `within` that lie in some support inside `within`.
  Mask relevant(Mask within) const {
    Mask u = 0;
    for (Mask x : supports_) {
      if ((x & ~within) == 0) u |= x;
    }
    return u;
  }

  int solve(Mask s) {
    if (s == 0) return 0;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    // The lowest vertex is either unused or covered by one support.
    const Mask v = s & (~s + 1);
    int best = solve(relevant(s & ~v));
    for (Mask x : supports_) {
      if ((x & v) != 0 && (x & ~s) == 0) best = std::max(best, 1 + solve(relevant(s & ~x)));
    }
    memo_.emplace(s, best);
    return best;
  }

  Graph g_;
  Graph h_;
  std::vector<std::vector<Mask>> models_;
  std::vector<Mask> supports_;
  std::unordered_map<Mask, int> memo_;
};

struct PackResult {
  int value = 0;
  std::vector<MinorModel> models;
};

/// pack_h(G) with a witness packing of support-minimal models.
inline PackResult pack_exact(const Graph& g, const Graph& h, const Limits& limits = {}) {
  PackingOracle oracle(g, h, limits);
  PackResult out;
  for (int i : oracle.packing(detail::full_mask(g.n()))) out.models.push_back(oracle.model(i));
  out.value = static_cast<int>(out.models.size());
  return out;
}

namespace detail {

/// Minimum hitting set of a family of vertex masks by branch and bound: branch on the
/// vertices of a smallest unhit set (each excluded from the later branches), bounded
/// below by a greedy family of pairwise disjoint unhit sets.
class HittingSetSolver {
 public:
  explicit HittingSetSolver(const std::vector<Mask>& sets) : sets_(sets) {}

  Mask solve(int upper) {
    best_size_ = upper + 1;
    best_ = 0;
    found_ = false;
    rec(0, 0, 0);
    return best_;
  }
  bool found() const { return found_; }

 private:
  void rec(Mask chosen, Mask banned, int size) {
    if (size >= best_size_) return;
    int pick = -1;
    int pick_free = 65;
    Mask used = 0;
    int disjoint = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const Mask x = sets_[i];
      if ((x & chosen) != 0) continue;
      const Mask free = x & ~banned;
      if (free == 0) return;
      const int c = std::popcount(free);
      if (c < pick_free) {
        pick_free = c;
        pick = static_cast<int>(i);
      }
      if ((free & used) == 0) {
        used |= free;
        ++disjoint;
      }
    }
    if (pick < 0) {
      best_size_ = size;
      best_ = chosen;
      found_ = true;
      return;
    }
    if (size + disjoint >= best_size_) return;
    Mask free = sets_[pick] & ~banned;
    Mask extra_ban = 0;
    for_each_bit(free, [&](int v) {
      rec(chosen | bit(v), banned | extra_ban, size + 1);
      extra_ban |= bit(v);
    });
  }

  const std::vector<Mask>& sets_;
  int best_size_ = 0;
  Mask best_ = 0;
  bool found_ = false;
};

}  // namespace detail

struct CoverResult {
  int value = 0;
  VertexSet vertices;
  int rounds = 0;  // hitting-set rounds of the implicit search
};

/// cover_h(G): smallest vertex set meeting every model. Implicit hitting set: keep a
/// family of minimal supports, solve it exactly, and add a minimal model that avoids the
/// current solution until none exists.
inline CoverResult cover_exact(const Graph& g, const Graph& h, const Limits& limits = {}) {
  detail::check_pack_limits(g, h, limits, "cover");
  const Mask all = detail::full_mask(g.n());
  std::vector<Mask> family;
  CoverResult out{0, VertexSet(g.n()), 0};
  Mask current = 0;
  while (true) {
    ++out.rounds;
    auto masks = detail::find_masks(g, h, all & ~current);
    if (!masks) break;
    family.push_back(detail::union_of(detail::minimize_masks(g, h, std::move(*masks))));
    detail::HittingSetSolver solver(family);
    current = solver.solve(g.n());
    if (!solver.found()) throw std::logic_error("cover: hitting set solver found nothing");
  }
  out.vertices = VertexSet::from_mask(g.n(), current);
  out.value = out.vertices.size();
  return out;
}

}  // namespace epgap
