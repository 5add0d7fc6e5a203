#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmg/colored_digraph.hpp"

namespace bmg {

using NodeId = std::uint32_t;

/// Rooted phylogenetic tree with colored leaves. Nodes are numbered in
/// preorder with children sorted by their smallest descendant leaf id, so
/// two trees with the same topology and leaf labels compare equal.
class PhyloTree {
 public:
  PhyloTree() = default;

  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::size_t num_leaves() const noexcept { return leaves_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  NodeId root() const noexcept { return 0; }

  bool is_leaf(NodeId v) const { return nodes_.at(v).leaf; }
  std::optional<NodeId> parent(NodeId v) const;
  std::span<const NodeId> children(NodeId v) const { return nodes_.at(v).children; }
  std::uint32_t depth(NodeId v) const { return nodes_.at(v).depth; }

  const std::string& leaf_id(NodeId v) const { return nodes_.at(v).id; }
  const std::string& leaf_color(NodeId v) const { return nodes_.at(v).color; }
  std::optional<NodeId> find_leaf(std::string_view id) const;
  /// Throws Error{UnknownLeaf}.
  NodeId leaf(std::string_view id) const;
  /// Leaf nodes ordered by leaf id.
  std::span<const NodeId> leaves() const noexcept { return leaves_; }
  std::vector<std::string> leaf_ids() const;
  /// L(T(v)), sorted.
  std::vector<std::string> leaf_set(NodeId v) const;

  /// True iff v lies in the subtree of `ancestor` (v <=_T ancestor).
  bool is_descendant(NodeId v, NodeId ancestor) const;
  NodeId lca(NodeId a, NodeId b) const;

  friend bool operator==(const PhyloTree& a, const PhyloTree& b);

 private:
  friend class TreeBuilder;

  struct Node {
    NodeId parent = 0;
    std::vector<NodeId> children;
    bool leaf = false;
    std::uint32_t depth = 0;
    std::string id;
    std::string color;
  };

  std::vector<Node> nodes_;
  std::vector<NodeId> leaves_;
};

/// Incremental tree construction. build() checks the phylogenetic property,
/// suppresses a unary root and canonicalizes node order.
class TreeBuilder {
 public:
  TreeBuilder();

  NodeId root() const noexcept { return 0; }
  NodeId add_inner(NodeId parent);
  NodeId add_leaf(NodeId parent, std::string id, std::string color);

  /// Throws NotPhylogenetic or DuplicateLeaf.
  PhyloTree build() &&;

  static PhyloTree star(std::span<const VertexSpec> leaves);

 private:
  struct Draft {
    NodeId parent = 0;
    std::vector<NodeId> children;
    bool leaf = false;
    std::string id;
    std::string color;
  };
  std::vector<Draft> drafts_;
};

/// Rooted triple ab|c with the pair stored sorted (a < b).
struct Triple {
  std::string a;
  std::string b;
  std::string c;

  static Triple make(std::string x, std::string y, std::string outgroup);
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& t);

struct Cluster {
  std::vector<std::string> leaves;
  bool nontrivial = false;
};

struct ClusterSet {
  std::vector<Cluster> clusters;

  bool is_hierarchy() const;
  std::size_t nontrivial_count() const;
};

/// Last common ancestor of a nonempty leaf set. Throws UnknownLeaf.
NodeId lca(const PhyloTree& tree, std::span<const std::string> leaves);

/// T restricted to `keep`, with degree-two vertices suppressed. Throws
/// UnknownLeaf or EmptyRestriction.
PhyloTree restrict_tree(const PhyloTree& tree, std::span<const std::string> keep);

/// lca(a,b) strictly below lca(a,c) = lca(b,c). Throws UnknownLeaf.
bool displays(const PhyloTree& tree, const Triple& t);

/// Every triple displayed by the tree (cubic in the number of leaves).
std::set<Triple> displayed_triples(const PhyloTree& tree);

ClusterSet clusters(const PhyloTree& tree);

/// The best match graph G(T, sigma).
ColoredDigraph bmg_from_tree(const PhyloTree& tree);

}  // namespace bmg
