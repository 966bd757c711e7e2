#pragma once

#include <vector>

#include "epgap/core/vertex_set.hpp"

namespace epgap::detail {

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

/// Vertices outside `set` adjacent to some member.
inline Mask reach_of(const std::vector<Mask>& adj, Mask set) {
  Mask r = 0;
  for_each_bit(set, [&](int v) { r |= adj[v]; });
  return r & ~set;
}

inline std::vector<Mask> mask_components(const std::vector<Mask>& adj, Mask within) {
  std::vector<Mask> out;
  while (within != 0) {
    Mask comp = bit(lowest_bit(within));
    Mask frontier = comp;
    while (frontier != 0) {
      const Mask grown = reach_of(adj, frontier) & within & ~comp;
      comp |= grown;
      frontier = grown;
    }
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

inline bool mask_connected(const std::vector<Mask>& adj, Mask set) {
  if (set == 0) return false;
  return mask_components(adj, set).size() == 1;
}

}  // namespace epgap::detail
