#include "bmg/phylo_tree.hpp"

#include <algorithm>
#include <functional>

#include "bmg/error.hpp"

namespace bmg {

std::optional<NodeId> PhyloTree::parent(NodeId v) const {
  if (v == root()) return std::nullopt;
  return nodes_.at(v).parent;
}

std::optional<NodeId> PhyloTree::find_leaf(std::string_view id) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), id,
                             [&](NodeId a, std::string_view b) { return nodes_[a].id < b; });
  if (it == leaves_.end() || nodes_[*it].id != id) return std::nullopt;
  return *it;
}

NodeId PhyloTree::leaf(std::string_view id) const {
  if (auto v = find_leaf(id)) return *v;
  throw Error(ErrorCode::UnknownLeaf, "no leaf '" + std::string(id) + "'");
}

std::vector<std::string> PhyloTree::leaf_ids() const {
  std::vector<std::string> ids;
  ids.reserve(leaves_.size());
  for (NodeId v : leaves_) ids.push_back(nodes_[v].id);
  return ids;
}

std::vector<std::string> PhyloTree::leaf_set(NodeId v) const {
  std::vector<std::string> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    if (nodes_.at(u).leaf) out.push_back(nodes_[u].id);
    for (NodeId c : nodes_[u].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PhyloTree::is_descendant(NodeId v, NodeId ancestor) const {
  while (nodes_.at(v).depth > nodes_.at(ancestor).depth) v = nodes_[v].parent;
  return v == ancestor;
}

NodeId PhyloTree::lca(NodeId a, NodeId b) const {
  while (nodes_.at(a).depth > nodes_.at(b).depth) a = nodes_[a].parent;
  while (nodes_[b].depth > nodes_[a].depth) b = nodes_[b].parent;
  while (a != b) {
    a = nodes_[a].parent;
    b = nodes_[b].parent;
  }
  return a;
}

bool operator==(const PhyloTree& a, const PhyloTree& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (x.parent != y.parent || x.leaf != y.leaf || x.children != y.children) return false;
    if (x.leaf && (x.id != y.id || x.color != y.color)) return false;
  }
  return true;
}

TreeBuilder::TreeBuilder() { drafts_.emplace_back(); }

NodeId TreeBuilder::add_inner(NodeId parent) {
  if (parent >= drafts_.size() || drafts_[parent].leaf) {
    throw Error(ErrorCode::NotPhylogenetic, "parent is not an inner node");
  }
  auto id = static_cast<NodeId>(drafts_.size());
  drafts_.emplace_back();
  drafts_.back().parent = parent;
  drafts_[parent].children.push_back(id);
  return id;
}

NodeId TreeBuilder::add_leaf(NodeId parent, std::string id, std::string color) {
  NodeId v = add_inner(parent);
  drafts_[v].leaf = true;
  drafts_[v].id = std::move(id);
  drafts_[v].color = std::move(color);
  return v;
}

PhyloTree TreeBuilder::build() && {
  NodeId top = 0;
  while (!drafts_[top].leaf && drafts_[top].children.size() == 1) {
    NodeId child = drafts_[top].children.front();
    // A single leaf below a unary root is the one-leaf tree; deeper unary
    // chains are rejected below.
    if (drafts_[child].leaf) {
      top = child;
      break;
    }
    if (drafts_[child].children.size() < 2) break;
    top = child;
  }
  if (!drafts_[top].leaf && drafts_[top].children.empty()) {
    throw Error(ErrorCode::NotPhylogenetic, "tree has no leaves");
  }

  std::vector<std::string> min_leaf(drafts_.size());
  std::vector<std::string> seen;
  std::function<void(NodeId, bool)> scan = [&](NodeId v, bool is_root) {
    Draft& d = drafts_[v];
    if (d.leaf) {
      min_leaf[v] = d.id;
      seen.push_back(d.id);
      return;
    }
    if (!is_root && d.children.size() < 2) {
      throw Error(ErrorCode::NotPhylogenetic, "inner vertex with fewer than two children");
    }
    for (NodeId c : d.children) scan(c, false);
    std::sort(d.children.begin(), d.children.end(),
              [&](NodeId a, NodeId b) { return min_leaf[a] < min_leaf[b]; });
    min_leaf[v] = min_leaf[d.children.front()];
  };
  scan(top, true);
  std::sort(seen.begin(), seen.end());
  if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end()) {
    throw Error(ErrorCode::DuplicateLeaf, "leaf '" + *it + "' occurs twice");
  }

  PhyloTree tree;
  std::function<void(NodeId, NodeId, std::uint32_t)> emit = [&](NodeId v, NodeId parent,
                                                                std::uint32_t depth) {
    auto id = static_cast<NodeId>(tree.nodes_.size());
    tree.nodes_.emplace_back();
    auto& node = tree.nodes_.back();
    node.parent = parent;
    node.depth = depth;
    node.leaf = drafts_[v].leaf;
    node.id = drafts_[v].id;
    node.color = drafts_[v].color;
    if (id != 0) tree.nodes_[parent].children.push_back(id);
    for (NodeId c : drafts_[v].children) emit(c, id, depth + 1);
  };
  emit(top, 0, 0);

  for (NodeId v = 0; v < tree.nodes_.size(); ++v) {
    if (tree.nodes_[v].leaf) tree.leaves_.push_back(v);
  }
  std::sort(tree.leaves_.begin(), tree.leaves_.end(), [&](NodeId a, NodeId b) {
    return tree.nodes_[a].id < tree.nodes_[b].id;
  });
  return tree;
}

PhyloTree TreeBuilder::star(std::span<const VertexSpec> leaves) {
  TreeBuilder b;
  for (const auto& v : leaves) b.add_leaf(b.root(), v.id, v.color);
  return std::move(b).build();
}

Triple Triple::make(std::string x, std::string y, std::string outgroup) {
  if (y < x) std::swap(x, y);
  return Triple{std::move(x), std::move(y), std::move(outgroup)};
}

std::string to_string(const Triple& t) { return t.a + t.b + "|" + t.c; }

bool ClusterSet::is_hierarchy() const {
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      const auto& p = clusters[i].leaves;
      const auto& q = clusters[j].leaves;
      std::vector<std::string> common;
      std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(common));
      if (!common.empty() && common != p && common != q) return false;
    }
  }
  return true;
}

std::size_t ClusterSet::nontrivial_count() const {
  return static_cast<std::size_t>(
      std::count_if(clusters.begin(), clusters.end(), [](const Cluster& c) { return c.nontrivial; }));
}

NodeId lca(const PhyloTree& tree, std::span<const std::string> leaves) {
  if (leaves.empty()) throw Error(ErrorCode::UnknownLeaf, "lca of an empty leaf set");
  NodeId v = tree.leaf(leaves.front());
  for (const auto& id : leaves.subspan(1)) v = tree.lca(v, tree.leaf(id));
  return v;
}

PhyloTree restrict_tree(const PhyloTree& tree, std::span<const std::string> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptyRestriction, "restriction to no leaves");
  std::vector<char> marked(tree.num_nodes(), 0);
  for (const auto& id : keep) {
    // Mark the leaf and its ancestors until an already-marked node.
    NodeId v = tree.leaf(id);
    while (!marked[v]) {
      marked[v] = 1;
      if (v == tree.root()) break;
      v = *tree.parent(v);
    }
  }

  auto kept_children = [&](NodeId v) {
    std::vector<NodeId> out;
    for (NodeId c : tree.children(v)) {
      if (marked[c]) out.push_back(c);
    }
    return out;
  };
  auto descend = [&](NodeId v) {
    for (auto kids = kept_children(v); !tree.is_leaf(v) && kids.size() == 1;
         kids = kept_children(v)) {
      v = kids.front();
    }
    return v;
  };

  TreeBuilder b;
  std::function<void(NodeId, NodeId)> copy = [&](NodeId v, NodeId into) {
    v = descend(v);
    if (tree.is_leaf(v)) {
      b.add_leaf(into, tree.leaf_id(v), tree.leaf_color(v));
      return;
    }
    NodeId inner = b.add_inner(into);
    for (NodeId c : kept_children(v)) copy(c, inner);
  };
  NodeId top = descend(tree.root());
  if (tree.is_leaf(top)) {
    b.add_leaf(b.root(), tree.leaf_id(top), tree.leaf_color(top));
  } else {
    for (NodeId c : kept_children(top)) copy(c, b.root());
  }
  return std::move(b).build();
}

bool displays(const PhyloTree& tree, const Triple& t) {
  NodeId a = tree.leaf(t.a);
  NodeId b = tree.leaf(t.b);
  NodeId c = tree.leaf(t.c);
  if (a == b || a == c || b == c) return false;
  NodeId ab = tree.lca(a, b);
  NodeId ac = tree.lca(a, c);
  return ab != ac && tree.is_descendant(ab, ac);
}

std::set<Triple> displayed_triples(const PhyloTree& tree) {
  std::set<Triple> out;
  auto leaves = tree.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      NodeId ab = tree.lca(leaves[i], leaves[j]);
      for (std::size_t k = 0; k < leaves.size(); ++k) {
        if (k == i || k == j) continue;
        NodeId ac = tree.lca(leaves[i], leaves[k]);
        if (ab != ac && tree.is_descendant(ab, ac)) {
          out.insert(Triple::make(tree.leaf_id(leaves[i]), tree.leaf_id(leaves[j]),
                                  tree.leaf_id(leaves[k])));
        }
      }
    }
  }
  return out;
}

ClusterSet clusters(const PhyloTree& tree) {
  ClusterSet set;
  const std::size_t n = tree.num_leaves();
  for (NodeId v = 0; v < tree.num_nodes(); ++v) {
    Cluster c;
    c.leaves = tree.leaf_set(v);
    c.nontrivial = c.leaves.size() != 1 && c.leaves.size() != n;
    set.clusters.push_back(std::move(c));
  }
  return set;
}

ColoredDigraph bmg_from_tree(const PhyloTree& tree) {
  const auto leaves = tree.leaves();
  std::vector<VertexSpec> specs;
  specs.reserve(leaves.size());
  for (NodeId v : leaves) specs.push_back({tree.leaf_id(v), tree.leaf_color(v)});
  ColoredDigraph base(specs, std::span<const ArcSpec>{});
  if (tree.empty()) return base;

  const std::size_t colors = base.num_colors();
  std::vector<Vertex> rank(tree.num_nodes(), 0);
  for (std::size_t i = 0; i < leaves.size(); ++i) rank[leaves[i]] = static_cast<Vertex>(i);

  // present[v * colors + s]: some leaf of color s below v. Preorder numbering
  // puts children after parents, so a reverse sweep is bottom-up.
  std::vector<char> present(tree.num_nodes() * colors, 0);
  for (NodeId v = static_cast<NodeId>(tree.num_nodes()); v-- > 0;) {
    if (tree.is_leaf(v)) {
      present[v * colors + base.color(rank[v])] = 1;
    } else {
      for (NodeId c : tree.children(v)) {
        for (std::size_t s = 0; s < colors; ++s) present[v * colors + s] |= present[c * colors + s];
      }
    }
  }

  std::vector<Arc> arcs;
  std::vector<char> found(colors);
  std::vector<char> fresh(colors);
  std::vector<NodeId> stack;
  for (NodeId x : leaves) {
    const Vertex vx = rank[x];
    std::fill(found.begin(), found.end(), 0);
    found[base.color(vx)] = 1;
    std::size_t missing = colors - 1;
    NodeId prev = x;
    while (missing > 0 && prev != tree.root()) {
      NodeId v = *tree.parent(prev);
      bool any = false;
      for (std::size_t s = 0; s < colors; ++s) {
        fresh[s] = !found[s] && present[v * colors + s];
        if (fresh[s]) {
          any = true;
          found[s] = 1;
          --missing;
        }
      }
      if (any) {
        for (NodeId c : tree.children(v)) {
          if (c != prev) stack.push_back(c);
        }
        while (!stack.empty()) {
          NodeId u = stack.back();
          stack.pop_back();
          if (tree.is_leaf(u)) {
            if (fresh[base.color(rank[u])]) arcs.push_back({vx, rank[u]});
          } else {
            for (NodeId c : tree.children(u)) stack.push_back(c);
          }
        }
      }
      prev = v;
    }
  }
  return base.with_arcs(arcs);
}

}  // namespace bmg
