#pragma once

#include <functional>
#include <vector>

namespace epgap::detail {

/// Maximum bipartite matching by augmenting paths (Kuhn). adj[l] lists right vertices in
/// preference order; returns match_of_left (-1 when unmatched).
inline std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  const int left = static_cast<int>(adj.size());
  std::vector<int> match_left(static_cast<std::size_t>(left), -1);
  std::vector<int> match_right(static_cast<std::size_t>(right_count), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int l) -> bool {
    for (int r : adj[l]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (match_right[r] < 0 || augment(match_right[r])) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < left; ++l) {
    seen.assign(static_cast<std::size_t>(right_count), 0);
    augment(l);
  }
  return match_left;
}

}  // namespace epgap::detail
