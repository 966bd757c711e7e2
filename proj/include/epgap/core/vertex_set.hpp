#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "epgap/core/error.hpp"

namespace epgap {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask bit(int v) { return Mask{1} << v; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

/// Subset of the dense vertex ids 0..universe-1 of some graph, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  template <typename Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  static VertexSet from_mask(int universe, Mask m) {
    if (universe > 64) throw ParameterError("VertexSet::from_mask: universe exceeds 64");
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = m;
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  void insert(int v) {
    check(v);
    words_[v >> 6] |= Mask{1} << (v & 63);
  }

  void erase(int v) {
    check(v);
    words_[v >> 6] &= ~(Mask{1} << (v & 63));
  }

  int size() const noexcept {
    int c = 0;
    for (Mask w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const noexcept {
    for (Mask w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Smallest member, or -1 when empty.
  int first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    }
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Mask w = words_[i];
      while (w != 0) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  Mask to_mask() const {
    if (universe_ > 64) throw ParameterError("VertexSet::to_mask: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Orders by universe, then by the sorted member list (lexicographic).
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    return a.members() < b.members();
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(universe_);
    for (Mask w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](int v) {
      if (!first_member) s += ",";
      s += std::to_string(v);
      first_member = false;
    });
    return s + "}";
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= universe_) {
      throw ParameterError("vertex " + std::to_string(v) + " outside universe of size " +
                           std::to_string(universe_));
    }
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw ParameterError("VertexSet universes differ");
  }

  int universe_ = 0;
  std::vector<Mask> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace epgap
