#include "partition_build.hpp"

#include <algorithm>

#include "bmg/error.hpp"
#include "bmg/triples.hpp"

namespace bmg::detail {

std::optional<PhyloTree> partition_build(std::span<const VertexSpec> leaves, const LevelRule& rule) {
  const std::size_t n = leaves.size();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "no leaves to build a tree on");

  UnionFind uf(n);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t next_tag = 0;
  TreeBuilder builder;

  struct Task {
    std::vector<std::uint32_t> members;
    NodeId attach;
    bool is_root;
  };
  std::vector<Task> work;
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0U);
  work.push_back({std::move(all), builder.root(), true});

  std::vector<std::uint32_t> block_of(n);
  while (!work.empty()) {
    Task task = std::move(work.back());
    work.pop_back();
    if (task.members.size() == 1) {
      const auto& leaf = leaves[task.members.front()];
      builder.add_leaf(task.attach, leaf.id, leaf.color);
      continue;
    }

    const std::uint32_t tag = ++next_tag;
    for (std::uint32_t v : task.members) {
      stamp[v] = tag;
      uf.reset(v);
    }
    rule(Level{task.members, &stamp, tag}, uf);

    std::vector<std::vector<std::uint32_t>> blocks;
    for (std::uint32_t v : task.members) {
      std::uint32_t r = uf.find(v);
      if (r == v) {
        block_of[v] = static_cast<std::uint32_t>(blocks.size());
        blocks.emplace_back();
      }
    }
    if (blocks.size() == 1) return std::nullopt;
    for (std::uint32_t v : task.members) blocks[block_of[uf.find(v)]].push_back(v);

    NodeId node = task.is_root ? builder.root() : builder.add_inner(task.attach);
    for (auto& b : blocks) work.push_back({std::move(b), node, false});
  }
  return std::move(builder).build();
}

}  // namespace bmg::detail

namespace bmg {

namespace {

using detail::Level;
using detail::UnionFind;

/// Triple-free rule on the adjacency structure. At a level L, x and an
/// out-neighbor y are joined when x misses some vertex of color(y) in L
/// (an informative triple xy|y'); if x reaches every vertex of that color in
/// L, the out-neighbors form forbidden triples with x.
class GraphRule {
 public:
  GraphRule(const ColoredDigraph& g, bool forbidden)
      : g_(g), forbidden_(forbidden), count_(g.num_colors()), out_count_(g.num_colors()) {}

  void operator()(const Level& level, UnionFind& uf) {
    std::fill(count_.begin(), count_.end(), 0);
    for (std::uint32_t v : level.members) ++count_[g_.color(v)];
    groups_.clear();

    for (std::uint32_t x : level.members) {
      const Color cx = g_.color(x);
      touched_.clear();
      for (Vertex y : g_.out(x)) {
        if (!level.contains(y) || g_.color(y) == cx) continue;
        if (out_count_[g_.color(y)]++ == 0) touched_.push_back(g_.color(y));
      }
      for (Vertex y : g_.out(x)) {
        if (!level.contains(y) || g_.color(y) == cx) continue;
        if (out_count_[g_.color(y)] < count_[g_.color(y)]) uf.unite(x, y);
      }
      if (forbidden_) {
        for (Color s : touched_) {
          if (out_count_[s] != count_[s] || count_[s] < 2) continue;
          std::vector<std::uint32_t> group{x};
          for (Vertex y : g_.out(x)) {
            if (g_.color(y) == s && level.contains(y)) group.push_back(y);
          }
          groups_.push_back(std::move(group));
        }
      }
      for (Color s : touched_) out_count_[s] = 0;
    }

    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& group : groups_) {
        const std::uint32_t x = group.front();
        const std::uint32_t rx = uf.find(x);
        bool joined = false;
        for (std::size_t i = 1; i < group.size() && !joined; ++i) joined = uf.find(group[i]) == rx;
        if (!joined) continue;
        for (std::size_t i = 1; i < group.size(); ++i) changed |= uf.unite(x, group[i]);
      }
    }
  }

 private:
  const ColoredDigraph& g_;
  bool forbidden_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> out_count_;
  std::vector<Color> touched_;
  std::vector<std::vector<std::uint32_t>> groups_;
};

}  // namespace

std::optional<PhyloTree> build_from_graph(const ColoredDigraph& g, TripleRule rule) {
  std::vector<VertexSpec> leaves;
  leaves.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) leaves.push_back({g.id(v), g.color_name(g.color(v))});
  GraphRule graph_rule(g, rule == TripleRule::WithForbidden);
  return detail::partition_build(leaves, std::ref(graph_rule));
}

}  // namespace bmg
