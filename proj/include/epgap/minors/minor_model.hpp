#pragma once

#include <string>
#include <vector>

#include "epgap/core/graph.hpp"

namespace epgap {

/// Minor model of `pattern` in `host`: branch_sets[p] is the host vertex set contracted
/// onto pattern vertex p.
struct MinorModel {
  Graph pattern;
  Graph host;
  std::vector<VertexSet> branch_sets;

  VertexSet support() const {
    VertexSet s(host.n());
    for (const auto& b : branch_sets) s |= b;
    return s;
  }
};

/// Checks the three defining clauses of a minor model and names the first one violated:
/// "bijection", "disjointness", "connectivity" or "edge realization".
inline Verdict verify_model(const MinorModel& m) {
  if (static_cast<int>(m.branch_sets.size()) != m.pattern.n()) {
    return Verdict::fail("bijection", "expected " + std::to_string(m.pattern.n()) + " branch sets, got " +
                                          std::to_string(m.branch_sets.size()));
  }
  for (int p = 0; p < m.pattern.n(); ++p) {
    const VertexSet& b = m.branch_sets[p];
    if (b.universe() != m.host.n()) return Verdict::fail("bijection", "branch set of " + std::to_string(p) + " has wrong universe");
    if (b.empty()) return Verdict::fail("bijection", "branch set of " + std::to_string(p) + " is empty");
  }
  for (int p = 0; p < m.pattern.n(); ++p) {
    for (int q = p + 1; q < m.pattern.n(); ++q) {
      if (m.branch_sets[p].intersects(m.branch_sets[q])) {
        return Verdict::fail("disjointness", "branch sets " + std::to_string(p) + " " + m.branch_sets[p].to_string() +
                                                 " and " + std::to_string(q) + " " + m.branch_sets[q].to_string() +
                                                 " overlap");
      }
    }
  }
  for (int p = 0; p < m.pattern.n(); ++p) {
    if (!is_connected(m.host, m.branch_sets[p])) {
      return Verdict::fail("connectivity",
                           "branch set " + std::to_string(p) + " " + m.branch_sets[p].to_string() + " is disconnected");
    }
  }
  for (const Edge& e : m.pattern.edges()) {
    if (!has_edge_between(m.host, m.branch_sets[e.u], m.branch_sets[e.v])) {
      return Verdict::fail("edge realization", "no host edge between branch sets of " + std::to_string(e.u) + " " +
                                                   m.branch_sets[e.u].to_string() + " and " + std::to_string(e.v) +
                                                   " " + m.branch_sets[e.v].to_string());
    }
  }
  return Verdict::pass();
}

/// True when the models use pairwise disjoint host vertex sets.
inline bool pairwise_disjoint(const std::vector<MinorModel>& models) {
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (std::size_t j = i + 1; j < models.size(); ++j) {
      if (models[i].support().intersects(models[j].support())) return false;
    }
  }
  return true;
}

/// Composes a model of A in B with a model of B in C into a model of A in C.
inline MinorModel compose(const MinorModel& a_in_b, const MinorModel& b_in_c) {
  MinorModel out{a_in_b.pattern, b_in_c.host, {}};
  for (const VertexSet& inner : a_in_b.branch_sets) {
    VertexSet lifted(b_in_c.host.n());
    inner.for_each([&](int b) { lifted |= b_in_c.branch_sets.at(static_cast<std::size_t>(b)); });
    out.branch_sets.push_back(std::move(lifted));
  }
  return out;
}

/// Re-expresses a model found inside a subgraph in terms of the parent graph.
inline MinorModel lift_model(const MinorModel& m, const Subgraph& sub, const Graph& parent) {
  MinorModel out{m.pattern, parent, {}};
  for (const VertexSet& b : m.branch_sets) out.branch_sets.push_back(lift(sub, b, parent.n()));
  return out;
}

}  // namespace epgap
