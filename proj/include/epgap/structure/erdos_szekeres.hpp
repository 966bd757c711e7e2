#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "epgap/core/error.hpp"

namespace epgap {

struct MonotoneSubsequence {
  bool increasing = true;
  std::vector<int> indices;
  std::vector<int> values;
};

namespace detail {

/// First position whose longest monotone run (ending there) reaches `want`, with the run;
/// predecessors are the earliest ones achieving the best length.
inline std::vector<int> monotone_run(const std::vector<int>& seq, int want, bool increasing) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> len(static_cast<std::size_t>(n), 1);
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const bool fits = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
      if (fits && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        pred[i] = j;
      }
    }
    if (len[i] >= want) {
      std::vector<int> run;
      for (int v = i; v != -1 && static_cast<int>(run.size()) < want; v = pred[v]) run.push_back(v);
      return {run.rbegin(), run.rend()};
    }
  }
  return {};
}

}  // namespace detail

/// Increasing subsequence of length k or decreasing one of length l from a sequence of
/// distinct integers of length at least (k-1)(l-1)+1. Increasing is tried first.
inline MonotoneSubsequence erdos_szekeres(const std::vector<int>& seq, int k, int l) {
  if (k < 1 || l < 1) throw ParameterError("erdos_szekeres: k and l must be positive");
  const long need = static_cast<long>(k - 1) * (l - 1) + 1;
  if (static_cast<long>(seq.size()) < need) {
    throw PreconditionError("erdos_szekeres: sequence length " + std::to_string(seq.size()) + " below " +
                            std::to_string(need));
  }
  if (std::set<int>(seq.begin(), seq.end()).size() != seq.size()) {
    throw PreconditionError("erdos_szekeres: entries must be distinct");
  }
  MonotoneSubsequence out;
  out.indices = detail::monotone_run(seq, k, true);
  if (out.indices.empty()) {
    out.increasing = false;
    out.indices = detail::monotone_run(seq, l, false);
  }
  if (out.indices.empty()) throw std::logic_error("erdos_szekeres: no monotone subsequence found");
  for (int i : out.indices) out.values.push_back(seq[i]);
  return out;
}

}  // namespace epgap
