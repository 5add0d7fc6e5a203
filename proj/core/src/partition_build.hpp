#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "bmg/phylo_tree.hpp"

namespace bmg::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  void reset(std::uint32_t v) { parent_[v] = v; }
  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  /// True if the two sets were distinct.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

/// Current leaf subset of one recursion step. Members are sorted indices.
struct Level {
  std::span<const std::uint32_t> members;
  const std::vector<std::uint32_t>* stamp = nullptr;
  std::uint32_t tag = 0;

  bool contains(std::uint32_t v) const { return (*stamp)[v] == tag; }
};

using LevelRule = std::function<void(const Level&, UnionFind&)>;

/// Top-down construction shared by BUILD and MTT: the rule merges leaves of
/// the current level, each resulting block becomes a child subtree. Fails as
/// soon as a level with two or more leaves stays in a single block. `leaves`
/// must be sorted by id without duplicates.
std::optional<PhyloTree> partition_build(std::span<const VertexSpec> leaves, const LevelRule& rule);

}  // namespace bmg::detail
